#include "lowbits/transform.hpp"

#include <openssl/evp.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "lowbits/errors.hpp"
#include "lowbits/mathcore.hpp"

namespace lowbits {

std::array<std::uint8_t, 20> sha1(std::span<const std::uint8_t> data) {
    std::array<std::uint8_t, 20> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha1(), nullptr) != 1 ||
        len != digest.size())
        throw std::runtime_error("sha1: EVP_Digest failed");
    return digest;
}

TransformSpec transform_from_name(std::string_view name) {
    if (name == "sha1-low") return TransformSpec::sha1_low();
    if (name == "sha1-block") return TransformSpec::sha1_block();
    if (name == "identity") return TransformSpec::identity_mod_n();
    throw ConfigError("unknown transform '" + std::string(name) +
                      "' (expected sha1-low, sha1-block or identity)");
}

std::string_view transform_name(TransformKind kind) {
    switch (kind) {
        case TransformKind::Sha1Low: return "sha1-low";
        case TransformKind::Sha1Block: return "sha1-block";
        case TransformKind::IdentityModN: return "identity";
    }
    throw ConfigError("invalid transform kind");
}

TransformKind transform_from_id(std::uint8_t id) {
    switch (id) {
        case 1: return TransformKind::Sha1Low;
        case 2: return TransformKind::Sha1Block;
        case 3: return TransformKind::IdentityModN;
    }
    throw MalformedContainerError("unknown transform id " + std::to_string(id));
}

EncodedMessage EncodedMessage::from_value(Bignum v, const PublicKey& pub) {
    if (v < 0 || v >= pub.n)
        throw std::domain_error("EncodedMessage: value outside [0, n)");
    return {std::move(v)};
}

EncodedMessage encode(std::span<const std::uint8_t> message, const TransformSpec& spec,
                      const PublicKey& pub) {
    switch (spec.kind) {
        case TransformKind::Sha1Low: {
            if (pub.bit_length <= spec.output_width)
                throw ConfigError("sha1-low needs a modulus wider than " +
                                  std::to_string(spec.output_width) + " bits (key has " +
                                  std::to_string(pub.bit_length) + ")");
            auto digest = sha1(message);
            return {from_bytes_be(digest)};
        }
        case TransformKind::Sha1Block: {
            // Repeat the digest to cover bit_length-8 bits, mask to exactly that
            // width, then reduce mod n (a no-op since 2^(bits-8) < n).
            auto digest = sha1(message);
            const unsigned width = pub.bit_length - 8;
            std::vector<std::uint8_t> block((width + 7) / 8);
            for (std::size_t i = 0; i < block.size(); ++i) block[i] = digest[i % digest.size()];
            Bignum v = low_bits(from_bytes_be(block), width);
            return {v % pub.n};
        }
        case TransformKind::IdentityModN:
            return {from_bytes_be(message) % pub.n};
    }
    throw ConfigError("invalid transform kind");
}

}  // namespace lowbits
