#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lowbits/bignum.hpp"

namespace lowbits {

/// Deterministic random source: mt19937_64, whose output stream is fixed by
/// the C++ standard, so fixed seeds reproduce bit-identical keys, messages,
/// and transcripts on every platform.
class DeterministicRng {
  public:
    explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}

    /// Independent substream for trial `stream` of a seeded batch. Trials keyed
    /// this way can run in any order (or in parallel) and still reproduce.
    static DeterministicRng substream(std::uint64_t seed, std::uint64_t stream) {
        return DeterministicRng(mix(mix(seed) + stream));
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform integer in [0, 2^nbits).
    Bignum bits(std::size_t nbits) {
        Bignum r;
        for (std::size_t got = 0; got < nbits; got += 64) {
            r <<= 64;
            r += Bignum(gen_());
        }
        return low_mask(r, nbits);
    }

    /// Uniform integer in [0, bound) by rejection.
    Bignum below(const Bignum& bound) {
        if (bound <= 0) throw std::domain_error("DeterministicRng::below: bound must be positive");
        if (bound == 1) return 0;
        const std::size_t nbits = bit_length(bound - 1);
        for (;;) {
            Bignum v = bits(nbits);
            if (v < bound) return v;
        }
    }

    std::vector<std::uint8_t> bytes(std::size_t n) {
        std::vector<std::uint8_t> out(n);
        for (std::size_t i = 0; i < n; i += 8) {
            std::uint64_t w = gen_();
            for (std::size_t j = 0; j < 8 && i + j < n; ++j)
                out[i + j] = static_cast<std::uint8_t>(w >> (8 * j));
        }
        return out;
    }

  private:
    static Bignum low_mask(const Bignum& x, std::size_t nbits) {
        Bignum r;
        mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), nbits);
        return r;
    }

    // splitmix64 finalizer; decorrelates seed/stream pairs.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 gen_;
};

}  // namespace lowbits
