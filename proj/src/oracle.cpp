#include "lowbits/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lowbits/errors.hpp"
#include "lowbits/forge.hpp"
#include "lowbits/rng.hpp"

namespace lowbits {

namespace {

constexpr unsigned kEnumerationCeiling = 24;  // ~16M iterations, sub-second

void check_modulus_bits(unsigned b) {
    if (b < 2) throw std::domain_error("brute_cuberoots_mod_pow2: b must be >= 2");
    if (b > kEnumerationCeiling)
        throw CapacityError("brute_cuberoots_mod_pow2: b = " + std::to_string(b) +
                            " exceeds the enumeration ceiling of " +
                            std::to_string(kEnumerationCeiling));
}

// s^3 mod 2^b without overflow: s < 2^24, so every partial product fits in 64 bits.
inline std::uint64_t cube_mod(std::uint64_t s, std::uint64_t mask) {
    return (((s * s) & mask) * s) & mask;
}

}  // namespace

bool CubeRootSet::contains(std::uint64_t s) const {
    return std::binary_search(roots.begin(), roots.end(), s);
}

CubeRootSet brute_cuberoots_mod_pow2_serial(std::uint64_t target, unsigned modulus_bits) {
    check_modulus_bits(modulus_bits);
    const std::uint64_t mask = (std::uint64_t{1} << modulus_bits) - 1;
    CubeRootSet out{modulus_bits, target & mask, {}};
    for (std::uint64_t s = 0; s <= mask; ++s)
        if (cube_mod(s, mask) == out.target) out.roots.push_back(s);
    return out;
}

CubeRootSet brute_cuberoots_mod_pow2(std::uint64_t target, unsigned modulus_bits) {
    check_modulus_bits(modulus_bits);
    const std::uint64_t mask = (std::uint64_t{1} << modulus_bits) - 1;
    const std::uint64_t total = mask + 1;
    CubeRootSet out{modulus_bits, target & mask, {}};

    std::vector<std::vector<std::uint64_t>> found(
        static_cast<std::size_t>(omp_get_max_threads()));

    // Contiguous stripe per thread; concatenating in thread order keeps the
    // roots ascending without a sort.
    #pragma omp parallel
    {
        const int t = omp_get_thread_num();
        const int nt = omp_get_num_threads();
        const std::uint64_t chunk = total / static_cast<std::uint64_t>(nt);
        const std::uint64_t lo = static_cast<std::uint64_t>(t) * chunk;
        const std::uint64_t hi = (t == nt - 1) ? total : lo + chunk;
        auto& local = found[static_cast<std::size_t>(t)];
        for (std::uint64_t s = lo; s < hi; ++s)
            if (cube_mod(s, mask) == out.target) local.push_back(s);
    }

    for (const auto& local : found)
        out.roots.insert(out.roots.end(), local.begin(), local.end());
    return out;
}

OddConstructionReport validate_odd_construction(unsigned trials, unsigned modulus_bits,
                                                std::uint64_t seed) {
    check_modulus_bits(modulus_bits);
    const std::uint64_t mask = (std::uint64_t{1} << modulus_bits) - 1;

    unsigned passes = 0;
    unsigned failures = 0;
    // First divergent trial (by index) wins, so the reported counterexample is
    // deterministic even with the loop running in parallel.
    std::uint64_t first_bad = trials;

    #pragma omp parallel for schedule(static) if (trials > 16) \
        reduction(+ : passes, failures) reduction(min : first_bad)
    for (unsigned i = 0; i < trials; ++i) {
        DeterministicRng rng = DeterministicRng::substream(seed, i);
        const std::uint64_t m = rng.next_u64() | 1;  // arbitrary odd value
        const Bignum root = odd_cube_root_mod_pow2(Bignum(static_cast<unsigned long>(m)),
                                                   modulus_bits);
        const CubeRootSet truth = brute_cuberoots_mod_pow2_serial(m & mask, modulus_bits);
        if (truth.contains(to_u64(root))) {
            ++passes;
        } else {
            ++failures;
            first_bad = std::min<std::uint64_t>(first_bad, i);
        }
    }

    if (failures > 0) {
        DeterministicRng rng = DeterministicRng::substream(seed, first_bad);
        const std::uint64_t m = rng.next_u64() | 1;
        const Bignum root = odd_cube_root_mod_pow2(Bignum(static_cast<unsigned long>(m)),
                                                   modulus_bits);
        throw OracleDivergenceError(
            "odd construction diverged from enumeration: b=" + std::to_string(modulus_bits) +
            " target=" + std::to_string(m & mask) + " got root=" + to_hex(root));
    }
    return {trials, passes, failures};
}

}  // namespace lowbits
