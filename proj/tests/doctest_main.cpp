#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

#include "lowbits/transform.hpp"

std::string message_with_digest_parity(bool odd) {
    for (int i = 0;; ++i) {
        std::string m = "m" + std::to_string(i);
        if ((lowbits::sha1(as_bytes(m))[19] & 1) == (odd ? 1 : 0)) return m;
    }
}
