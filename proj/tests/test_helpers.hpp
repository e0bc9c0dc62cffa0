#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "lowbits/bignum.hpp"

inline std::span<const std::uint8_t> as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

/// Messages "m0", "m1", ... scanned until the SHA-1 digest has the wanted
/// parity; used by tests that need to hit one specific forgery case.
std::string message_with_digest_parity(bool odd);
