#include "lowbits/keys.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "lowbits/errors.hpp"
#include "lowbits/mathcore.hpp"
#include "lowbits/rng.hpp"
#include "lowbits/transform.hpp"

namespace lowbits {

namespace {

constexpr std::array<unsigned, 54> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

constexpr int kMillerRabinRounds = 40;

bool miller_rabin(const Bignum& n, DeterministicRng& rng, int rounds) {
    // n odd, n > 251 here. Write n-1 = q * 2^s with q odd.
    const Bignum n_minus_1 = n - 1;
    std::size_t s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
    Bignum q = n_minus_1 >> s;

    for (int round = 0; round < rounds; ++round) {
        Bignum a = rng.below(n - 3) + 2;  // a in [2, n-2]
        Bignum x = mod_pow(a, q, n);
        if (x == 1 || x == n_minus_1) continue;
        bool witness = true;
        for (std::size_t i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_probable_prime(const Bignum& n, DeterministicRng& rng) {
    for (unsigned p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return miller_rabin(n, rng, kMillerRabinRounds);
}

/// Odd prime candidate with the top two bits set; rejects p mod 3 == 1 so
/// that gcd(3, p-1) == 1 and e = 3 is always usable.
Bignum sample_prime(unsigned bits, DeterministicRng& rng) {
    for (;;) {
        Bignum cand = rng.bits(bits);
        mpz_setbit(cand.get_mpz_t(), bits - 1);
        mpz_setbit(cand.get_mpz_t(), bits - 2);
        mpz_setbit(cand.get_mpz_t(), 0);
        if (cand % 3 == 1) continue;
        if (is_probable_prime(cand, rng)) return cand;
    }
}

}  // namespace

RsaKeyPair generate_keypair(unsigned bit_length, std::uint64_t seed) {
    if (bit_length < 64)
        throw ConfigError("generate_keypair: bit_length must be >= 64 (got " +
                          std::to_string(bit_length) + ")");
    if (bit_length % 2 != 0)
        throw ConfigError("generate_keypair: bit_length must be even (got " +
                          std::to_string(bit_length) + ")");

    DeterministicRng rng(seed);
    const unsigned half = bit_length / 2;

    RsaKeyPair key;
    key.bit_length = bit_length;
    key.p = sample_prime(half, rng);
    do {
        key.q = sample_prime(half, rng);
    } while (key.q == key.p);
    key.n = key.p * key.q;

    // Top-two-bits sampling makes this structural, but it is the type invariant.
    if (lowbits::bit_length(key.n) != bit_length)
        throw InternalCheckError("generate_keypair: modulus has wrong bit length");

    const Bignum phi = (key.p - 1) * (key.q - 1);
    ExtGcdResult e = ext_gcd(3, phi);
    if (e.g != 1) throw InternalCheckError("generate_keypair: gcd(3, phi) != 1");
    key.d = e.x % phi;
    if (key.d < 0) key.d += phi;
    if ((3 * key.d) % phi != 1)
        throw InternalCheckError("generate_keypair: 3d != 1 mod phi");
    return key;
}

Signature sign(std::span<const std::uint8_t> message, const RsaKeyPair& key,
               const TransformSpec& transform) {
    EncodedMessage m = encode(message, transform, key.public_key());
    return {mod_pow(m.value, key.d, key.n)};
}

bool verify_correct(std::span<const std::uint8_t> message, const Signature& sig,
                    const PublicKey& pub, const TransformSpec& transform) {
    if (sig.value < 0 || sig.value >= pub.n)
        throw MalformedSignatureError("verify_correct: signature outside [0, n)");
    EncodedMessage expected = encode(message, transform, pub);
    return expected.value == mod_pow(sig.value, PublicKey::kPublicExponent, pub.n);
}

namespace {

std::string hex_line(const char* name, const Bignum& v) {
    return std::string(name) + "=" + to_hex(v) + "\n";
}

struct KeyFields {
    Bignum n, d, e, bits;
    bool has_d = false;
};

KeyFields parse_fields(std::string_view text, bool expect_private) {
    KeyFields f;
    bool has_n = false, has_e = false, has_bits = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("key file: malformed line '" + line + "'");
        std::string name = line.substr(0, eq);
        Bignum value = from_hex(line.substr(eq + 1));
        if (name == "n") { f.n = value; has_n = true; }
        else if (name == "d") { f.d = value; f.has_d = true; }
        else if (name == "e") { f.e = value; has_e = true; }
        else if (name == "bits") { f.bits = value; has_bits = true; }
        else throw ConfigError("key file: unknown field '" + name + "'");
    }
    if (!has_n || !has_e || !has_bits)
        throw ConfigError("key file: missing n=, e= or bits= field");
    if (expect_private && !f.has_d)
        throw ConfigError("key file: private key requires a d= field");
    if (f.e != PublicKey::kPublicExponent)
        throw ConfigError("key file: only public exponent 3 is supported");
    if (!f.bits.fits_ulong_p())
        throw ConfigError("key file: bits= field out of range");
    unsigned bits = static_cast<unsigned>(f.bits.get_ui());
    if (bit_length(f.n) != bits)
        throw ConfigError("key file: n does not have the declared bit length");
    return f;
}

}  // namespace

std::string serialize_private_key(const RsaKeyPair& key) {
    return hex_line("n", key.n) + hex_line("d", key.d) +
           hex_line("e", PublicKey::kPublicExponent) + hex_line("bits", key.bit_length);
}

std::string serialize_public_key(const PublicKey& pub) {
    return hex_line("n", pub.n) + hex_line("e", PublicKey::kPublicExponent) +
           hex_line("bits", pub.bit_length);
}

RsaKeyPair parse_private_key(std::string_view text) {
    KeyFields f = parse_fields(text, true);
    RsaKeyPair key;
    key.n = f.n;
    key.d = f.d;
    key.bit_length = static_cast<unsigned>(f.bits.get_ui());
    return key;
}

PublicKey parse_public_key(std::string_view text) {
    KeyFields f = parse_fields(text, false);
    return {f.n, static_cast<unsigned>(f.bits.get_ui())};
}

namespace {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open key file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write key file: " + path.string());
    out << text;
}

}  // namespace

void write_private_key_file(const std::filesystem::path& path, const RsaKeyPair& key) {
    write_text_file(path, serialize_private_key(key));
}

void write_public_key_file(const std::filesystem::path& path, const PublicKey& pub) {
    write_text_file(path, serialize_public_key(pub));
}

RsaKeyPair load_private_key(const std::filesystem::path& path) {
    return parse_private_key(read_text_file(path));
}

PublicKey load_public_key(const std::filesystem::path& path) {
    return parse_public_key(read_text_file(path));
}

}  // namespace lowbits
