#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "lowbits/bignum.hpp"
#include "lowbits/keys.hpp"

namespace lowbits {

/// Message-encoding transformations T: bytes -> [0, n).
enum class TransformKind : std::uint8_t {
    /// SHA-1 digest, big-endian, in bits 0..159; all high bits zero.
    /// The configuration seen in the attacked deployment. Requires n wider
    /// than 160 bits.
    Sha1Low = 1,
    /// SHA-1 digest repeated to fill the low n_bits-8 bits, then reduced mod n.
    /// Exists to exercise forgeries on encoded messages with nonzero high bits.
    Sha1Block = 2,
    /// Message bytes read big-endian as an integer, reduced mod n.
    IdentityModN = 3,
};

struct TransformSpec {
    TransformKind kind = TransformKind::Sha1Low;
    unsigned output_width = 160;  // digest width for sha1-low

    static TransformSpec sha1_low() { return {TransformKind::Sha1Low, 160}; }
    static TransformSpec sha1_block() { return {TransformKind::Sha1Block, 0}; }
    static TransformSpec identity_mod_n() { return {TransformKind::IdentityModN, 0}; }
};

/// CLI / container names: "sha1-low", "sha1-block", "identity".
TransformSpec transform_from_name(std::string_view name);
std::string_view transform_name(TransformKind kind);
TransformKind transform_from_id(std::uint8_t id);

enum class Parity { Even, Odd };

/// The integer M = T(m). The forgery construction dispatches on bit 0 of the
/// full value, which equals the parity of M mod 2^b for any b >= 1.
struct EncodedMessage {
    Bignum value;

    bool odd() const { return is_odd(value); }
    Parity parity() const { return odd() ? Parity::Odd : Parity::Even; }

    /// Wrap a raw integer as an encoded message; requires 0 <= v < pub.n.
    static EncodedMessage from_value(Bignum v, const PublicKey& pub);
};

/// Apply the transformation. Deterministic; result is always in [0, n).
EncodedMessage encode(std::span<const std::uint8_t> message, const TransformSpec& spec,
                      const PublicKey& pub);

/// SHA-1 digest (via OpenSSL).
std::array<std::uint8_t, 20> sha1(std::span<const std::uint8_t> data);

}  // namespace lowbits
