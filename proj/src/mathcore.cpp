#include "lowbits/mathcore.hpp"

#include <stdexcept>

#include "lowbits/errors.hpp"

namespace lowbits {

Bignum mod_pow(const Bignum& base, const Bignum& exponent, const Bignum& modulus) {
    if (modulus < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
    if (base < 0 || exponent < 0) throw std::domain_error("mod_pow: negative operand");
    Bignum r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

ExtGcdResult ext_gcd(const Bignum& a, const Bignum& b) {
    if (a == 0 && b == 0) throw std::domain_error("ext_gcd: gcd(0, 0) is undefined");
    if (a < 0 || b < 0) throw std::domain_error("ext_gcd: negative operand");
    ExtGcdResult r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Bignum inverse_of_three_mod_pow2(unsigned b) {
    if (b < 2) throw std::domain_error("inverse_of_three_mod_pow2: b must be >= 2");
    const Bignum modulus = pow2(b - 1);
    ExtGcdResult e = ext_gcd(3, modulus);
    Bignum r = e.x % modulus;
    if (r < 0) r += modulus;
    if (e.g != 1 || (3 * r) % modulus != 1)
        throw InternalCheckError("inverse_of_three_mod_pow2: 3*r != 1 mod 2^(b-1)");
    return r;
}

Bignum integer_cuberoot(const Bignum& n) {
    if (n < 0) throw std::domain_error("integer_cuberoot: negative input");
    if (n < 8) return n >= 1 ? 1 : 0;
    // Start from 2^ceil(bits/3) >= n^(1/3); the iteration is non-increasing
    // from above until it stalls.
    Bignum x = pow2((bit_length(n) + 2) / 3);
    for (;;) {
        Bignum next = (2 * x + n / (x * x)) / 3;
        if (next >= x) break;
        x = next;
    }
    while (x * x * x > n) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
    return x;
}

Bignum low_bits(const Bignum& x, unsigned b) {
    if (b == 0) throw std::domain_error("low_bits: b must be >= 1");
    if (x < 0) throw std::domain_error("low_bits: negative input");
    Bignum r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), b);
    return r;
}

}  // namespace lowbits
