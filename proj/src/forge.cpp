#include "lowbits/forge.hpp"

#include <stdexcept>
#include <string>

#include "lowbits/errors.hpp"
#include "lowbits/mathcore.hpp"

namespace lowbits {

namespace {

constexpr unsigned kMinCompareBits = 8;  // below this, brute force beats the math

void require_forgeable(unsigned b, const PublicKey& pub, const ForgeOptions& options) {
    if (b < kMinCompareBits)
        throw std::domain_error("forge: compare_bits must be >= " +
                                std::to_string(kMinCompareBits) +
                                " (odd_cube_root_mod_pow2 covers smaller b for tests)");
    if (!check_bound(b, pub.bit_length) && !options.force_out_of_bound)
        throw BoundError("forge: 3*(b+3) = " + std::to_string(3ULL * (b + 3ULL)) +
                         " is not < modulus bits = " + std::to_string(pub.bit_length) +
                         "; pass --force-out-of-bound to attempt anyway");
}

}  // namespace

bool check_bound(unsigned compare_bits, unsigned modulus_bits) {
    return 3ULL * (static_cast<unsigned long long>(compare_bits) + 3ULL) < modulus_bits;
}

Bignum odd_cube_root_mod_pow2(const Bignum& value, unsigned b) {
    if (b < 2) throw std::domain_error("odd_cube_root_mod_pow2: b must be >= 2");
    if (!is_odd(value))
        throw WrongCaseError("odd_cube_root_mod_pow2: value must be odd");
    return mod_pow(value, inverse_of_three_mod_pow2(b), pow2(b));
}

ForgedSignature forge_odd(const EncodedMessage& M, unsigned b, const PublicKey& pub,
                          const ForgeOptions& options) {
    if (!M.odd()) throw WrongCaseError("forge_odd: encoded message is even");
    require_forgeable(b, pub, options);
    ForgedSignature f;
    f.construction = ForgeCase::Odd;
    f.r = inverse_of_three_mod_pow2(b);
    f.sigma = mod_pow(M.value, f.r, pow2(b));
    return f;
}

ForgedSignature forge_even(const EncodedMessage& M, unsigned b, const PublicKey& pub,
                           const ForgeOptions& options) {
    if (M.odd()) throw WrongCaseError("forge_even: encoded message is odd");
    require_forgeable(b, pub, options);

    ForgedSignature f;
    f.construction = ForgeCase::Even;
    f.r = inverse_of_three_mod_pow2(b);
    // n odd makes M + n odd, a unit mod 2^b.
    f.tau = mod_pow(M.value + pub.n, f.r, pow2(b));

    // Least c with (2^b * c)^3 > n, computed exactly: floor(cbrt(n) / 2^b) + 1
    // already clears the cube; the loop is a guard and never fires.
    f.c = integer_cuberoot(pub.n) / pow2(b) + 1;
    Bignum shifted = f.c << b;
    while (shifted * shifted * shifted <= pub.n) {
        f.c += 1;
        shifted += pow2(b);
    }
    f.sigma = shifted + f.tau;
    return f;
}

ForgedSignature forge(std::span<const std::uint8_t> message, const PublicKey& pub,
                      const VerifierPolicy& policy, const ForgeOptions& options) {
    const unsigned b = policy.compare_bits;
    const bool in_bound = check_bound(b, pub.bit_length);
    if (!in_bound && !options.force_out_of_bound)
        throw BoundError("forge: 3*(b+3) = " + std::to_string(3ULL * (b + 3ULL)) +
                         " is not < modulus bits = " + std::to_string(pub.bit_length) +
                         "; pass --force-out-of-bound to attempt anyway");

    EncodedMessage M = encode(message, policy.transform, pub);
    ForgedSignature f = M.odd() ? forge_odd(M, b, pub, options)
                                : forge_even(M, b, pub, options);
    if (in_bound && !verify_flawed(message, Signature{f.sigma}, pub, policy))
        throw InternalCheckError("forge: flawed verifier rejected an in-bound forgery");
    return f;
}

Bignum report_slack(const ForgedSignature& forged, const EncodedMessage& M,
                    const PublicKey& pub, unsigned b) {
    const Bignum cube_mod_n = mod_pow(forged.sigma, 3, pub.n);
    const Bignum matched = low_bits(M.value, b);
    const Bignum diff = cube_mod_n - matched;
    if (diff < 0 || !mpz_divisible_2exp_p(diff.get_mpz_t(), b))
        throw InternalCheckError("report_slack: sigma^3 mod n does not extend M's low bits");
    const Bignum z = diff >> b;
    if ((z << b) >= pub.n)
        throw InternalCheckError("report_slack: 2^b * z >= n");
    return z;
}

}  // namespace lowbits
