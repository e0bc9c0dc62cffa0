#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lowbits {

/// Arbitrary-precision non-negative integer. All magnitudes in the library
/// (moduli, exponents, encoded messages, signatures) live in this type;
/// signedness is only ever needed for Bezout cofactors.
using Bignum = mpz_class;

inline bool is_odd(const Bignum& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }
inline bool is_even(const Bignum& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

/// Number of bits in the binary representation; bit_length(0) == 0.
inline std::size_t bit_length(const Bignum& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

/// 2^k
inline Bignum pow2(std::size_t k) {
    Bignum r;
    mpz_setbit(r.get_mpz_t(), k);
    return r;
}

/// Big-endian magnitude bytes -> integer. Empty input is 0.
inline Bignum from_bytes_be(std::span<const std::uint8_t> bytes) {
    Bignum r;
    if (!bytes.empty())
        mpz_import(r.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
    return r;
}

/// Integer -> minimal big-endian magnitude bytes. 0 -> empty vector.
inline std::vector<std::uint8_t> to_bytes_be(const Bignum& x) {
    std::vector<std::uint8_t> out;
    if (x == 0) return out;
    out.resize((bit_length(x) + 7) / 8);
    std::size_t count = 0;
    mpz_export(out.data(), &count, 1, 1, 0, 0, x.get_mpz_t());
    out.resize(count);
    return out;
}

/// Lowercase hex, no prefix, no leading zeros ("0" for zero).
inline std::string to_hex(const Bignum& x) { return x.get_str(16); }

inline Bignum from_hex(std::string_view hex) {
    Bignum r;
    if (hex.empty() || mpz_set_str(r.get_mpz_t(), std::string(hex).c_str(), 16) != 0)
        throw std::invalid_argument("from_hex: not a hexadecimal integer: '" + std::string(hex) + "'");
    return r;
}

inline std::uint64_t to_u64(const Bignum& x) {
    return static_cast<std::uint64_t>(mpz_get_ui(x.get_mpz_t()));
}

}  // namespace lowbits
