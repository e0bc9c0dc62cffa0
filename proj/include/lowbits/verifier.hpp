#pragma once

#include <span>

#include "lowbits/keys.hpp"
#include "lowbits/transform.hpp"

namespace lowbits {

/// Parameters of the flawed verifier: which transformation it applies and how
/// many low-order bits it compares. Any b >= 1 is accepted, including values
/// outside the attack's guarantee bound; the policy models the victim and
/// must not enforce attacker-side constraints.
struct VerifierPolicy {
    unsigned compare_bits = 160;
    TransformSpec transform = TransformSpec::sha1_low();

    /// True iff 3*(compare_bits + 3) < bit length of n, the condition under
    /// which the forgery constructions are guaranteed to succeed.
    bool bound_satisfied(const PublicKey& pub) const;
};

/// The flawed check: computes M' = T(m) and M'' = sig^3 mod n, then compares
/// only bits 0..b-1 of the two values. Everything above bit b-1 is ignored.
/// Throws MalformedSignatureError if sig.value >= n.
bool verify_flawed(std::span<const std::uint8_t> message, const Signature& sig,
                   const PublicKey& pub, const VerifierPolicy& policy);

}  // namespace lowbits
