#include "lowbits/verifier.hpp"

#include <stdexcept>

#include "lowbits/errors.hpp"
#include "lowbits/forge.hpp"
#include "lowbits/mathcore.hpp"

namespace lowbits {

bool VerifierPolicy::bound_satisfied(const PublicKey& pub) const {
    return check_bound(compare_bits, pub.bit_length);
}

bool verify_flawed(std::span<const std::uint8_t> message, const Signature& sig,
                   const PublicKey& pub, const VerifierPolicy& policy) {
    if (policy.compare_bits == 0)
        throw std::domain_error("verify_flawed: compare_bits must be >= 1");
    if (sig.value < 0 || sig.value >= pub.n)
        throw MalformedSignatureError("verify_flawed: signature outside [0, n)");
    EncodedMessage expected = encode(message, policy.transform, pub);
    Bignum recovered = mod_pow(sig.value, PublicKey::kPublicExponent, pub.n);
    return low_bits(expected.value, policy.compare_bits) ==
           low_bits(recovered, policy.compare_bits);
}

}  // namespace lowbits
