#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "lowbits/bignum.hpp"

namespace lowbits {

struct TransformSpec;

/// RSA verification key. The public exponent is fixed at 3 throughout.
struct PublicKey {
    Bignum n;
    unsigned bit_length = 0;

    static constexpr unsigned kPublicExponent = 3;
};

/// Full keypair. p and q are retained so that tests can check the keypair
/// invariants directly; they are never serialized. Keys loaded from disk
/// have p == q == 0.
struct RsaKeyPair {
    Bignum n;
    unsigned bit_length = 0;
    Bignum d;
    Bignum p;
    Bignum q;

    PublicKey public_key() const { return {n, bit_length}; }
    bool has_factors() const { return p != 0 && q != 0; }
};

struct Signature {
    Bignum value;
};

/// Deterministic textbook RSA key generation with e = 3.
///
/// Primes are rejection-sampled with the top two bits set (so n has exactly
/// `bit_length` bits) and p mod 3 != 1 (so 3 is invertible mod phi(n)), then
/// tested with 40 Miller-Rabin rounds. All randomness is drawn from the seed;
/// identical seeds give bit-identical keypairs.
///
/// Requires bit_length >= 64 and even; throws ConfigError otherwise.
RsaKeyPair generate_keypair(unsigned bit_length, std::uint64_t seed);

/// sigma = T(m)^d mod n.
Signature sign(std::span<const std::uint8_t> message, const RsaKeyPair& key,
               const TransformSpec& transform);

/// Full-equality verification: true iff T(m) == sig^3 mod n, all bits compared.
/// Throws MalformedSignatureError if sig.value >= n (not the same as false).
bool verify_correct(std::span<const std::uint8_t> message, const Signature& sig,
                    const PublicKey& pub, const TransformSpec& transform);

// Key files: lowercase hex fields, one per line, in the order n=, d=, e=, bits=
// (public files omit d=). See README for the exact grammar.
std::string serialize_private_key(const RsaKeyPair& key);
std::string serialize_public_key(const PublicKey& pub);
RsaKeyPair parse_private_key(std::string_view text);
PublicKey parse_public_key(std::string_view text);

void write_private_key_file(const std::filesystem::path& path, const RsaKeyPair& key);
void write_public_key_file(const std::filesystem::path& path, const PublicKey& pub);
RsaKeyPair load_private_key(const std::filesystem::path& path);
PublicKey load_public_key(const std::filesystem::path& path);

}  // namespace lowbits
