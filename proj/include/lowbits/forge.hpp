#pragma once

#include <span>

#include "lowbits/bignum.hpp"
#include "lowbits/keys.hpp"
#include "lowbits/transform.hpp"
#include "lowbits/verifier.hpp"

namespace lowbits {

enum class ForgeCase { Odd, Even };

/// A forged signature together with how it was built.
///
/// Odd construction:  sigma = M^r mod 2^b, where 3r == 1 mod 2^(b-1).
///   Then sigma^3 == M mod 2^b and sigma^3 < n, so the low b bits survive
///   the reduction mod n untouched.
/// Even construction: sigma = 2^b*c + tau with tau = (M+n)^r mod 2^b and c
///   the least integer with (2^b*c)^3 > n. Then n < sigma^3 < (125/64)*n,
///   so sigma^3 mod n = sigma^3 - n, whose low b bits equal those of M.
struct ForgedSignature {
    Bignum sigma;
    ForgeCase construction = ForgeCase::Odd;
    Bignum r;    // the inverse of 3 mod 2^(b-1) that was used
    Bignum c;    // even construction only, 0 otherwise
    Bignum tau;  // even construction only, 0 otherwise
};

struct ForgeOptions {
    /// Attempt the construction even when check_bound fails. Outside the bound
    /// the guarantees are void; the sweep harness uses this to measure where
    /// failures begin.
    bool force_out_of_bound = false;
};

/// True iff 3*(b + 3) < modulus_bits, the exact integer form of
/// b < modulus_bits/3 - 3. Under this bound both constructions succeed for
/// every message.
bool check_bound(unsigned compare_bits, unsigned modulus_bits);

/// Cube root of an odd value in the unit group mod 2^b: value^r mod 2^b with
/// 3r == 1 mod 2^(b-1). Requires b >= 2 and odd value. This is the core of
/// the odd construction, exposed without the b >= 8 floor so that tests can
/// compare it against exhaustive enumeration at tiny b.
Bignum odd_cube_root_mod_pow2(const Bignum& value, unsigned b);

/// Odd-case forgery. Requires M odd, b >= 8, and check_bound (unless
/// overridden). Within the bound: sigma^3 < n and sigma^3 mod n == M mod 2^b.
ForgedSignature forge_odd(const EncodedMessage& M, unsigned b, const PublicKey& pub,
                          const ForgeOptions& options = {});

/// Even-case forgery. Requires M even, b >= 8, and check_bound (unless
/// overridden). Within the bound: n < sigma^3 < (125/64)*n and
/// (sigma^3 - n) mod 2^b == M mod 2^b.
ForgedSignature forge_even(const EncodedMessage& M, unsigned b, const PublicKey& pub,
                           const ForgeOptions& options = {});

/// Forge a signature on an arbitrary message using only the public key:
/// encodes the message, dispatches on the parity of M, and (within the bound)
/// asserts that the flawed verifier accepts the result before returning.
/// A self-check failure within the bound throws InternalCheckError; the
/// constructions are proven, so it indicates a bug, never bad luck.
ForgedSignature forge(std::span<const std::uint8_t> message, const PublicKey& pub,
                      const VerifierPolicy& policy, const ForgeOptions& options = {});

/// The slack integer z with sigma^3 mod n == (M mod 2^b) + 2^b*z. This is the
/// high-order garbage the flawed verifier never looks at. Asserts exact
/// divisibility and 2^b*z < n; requires `forged` to have been produced for
/// (M, b, pub).
Bignum report_slack(const ForgedSignature& forged, const EncodedMessage& M,
                    const PublicKey& pub, unsigned b);

}  // namespace lowbits
