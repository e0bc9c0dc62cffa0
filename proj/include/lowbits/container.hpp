#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lowbits/bignum.hpp"
#include "lowbits/transform.hpp"

namespace lowbits {

/// On-disk envelope binding a payload to the verifier policy it was signed
/// (or forged) under plus the signature. Layout, all integers big-endian:
///
///   magic   "LBF1"                     4 bytes
///   version 0x01                       1 byte
///   b       compared-bit-count         2 bytes
///   transform id (1 sha1-low, 2 sha1-block, 3 identity)   1 byte
///   payload_length                     4 bytes
///   payload                            payload_length bytes
///   signature_length                   4 bytes
///   signature magnitude, minimal big-endian (empty encodes 0)
///
/// Parsing is strict: wrong magic or version, inconsistent lengths, trailing
/// bytes, or a non-minimal signature encoding all throw MalformedContainerError.
struct SignedContainer {
    unsigned compare_bits = 0;
    TransformKind transform = TransformKind::Sha1Low;
    std::vector<std::uint8_t> payload;
    Bignum signature;
};

std::vector<std::uint8_t> serialize_container(const SignedContainer& c);
SignedContainer parse_container(std::span<const std::uint8_t> bytes);

void write_container_file(const std::filesystem::path& path, const SignedContainer& c);
SignedContainer load_container(const std::filesystem::path& path);

}  // namespace lowbits
