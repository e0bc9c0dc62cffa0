#pragma once

#include "lowbits/bignum.hpp"

namespace lowbits {

/// base^exponent mod modulus. Requires modulus >= 2 and non-negative operands.
Bignum mod_pow(const Bignum& base, const Bignum& exponent, const Bignum& modulus);

/// gcd(a, b) together with Bezout cofactors: a*x + b*y == g.
/// The cofactors are the only signed values in the library.
struct ExtGcdResult {
    Bignum g;
    Bignum x;
    Bignum y;
};

/// Extended Euclid. Requires a and b not both zero.
ExtGcdResult ext_gcd(const Bignum& a, const Bignum& b);

/// The r with 3*r == 1 (mod 2^(b-1)), r in [1, 2^(b-1)). Exists for every
/// b >= 2 since 3 is odd. This is the exponent that inverts cubing on the
/// odd residues mod 2^b.
Bignum inverse_of_three_mod_pow2(unsigned b);

/// The unique t with t^3 <= n < (t+1)^3. Newton iteration on integers with a
/// final correction loop; exact at any size, unlike floating-point cbrt.
Bignum integer_cuberoot(const Bignum& n);

/// x mod 2^b, i.e. the window of bits 0..b-1. Requires b >= 1.
Bignum low_bits(const Bignum& x, unsigned b);

}  // namespace lowbits
