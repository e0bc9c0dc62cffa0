#pragma once

#include <cstdint>
#include <vector>

#include "lowbits/bignum.hpp"

namespace lowbits {

/// Exhaustive ground truth for cube roots modulo 2^b.
///
/// Everything in this module runs on plain 64-bit arithmetic: it never touches
/// the bignum layer or the inverse-of-3 construction it is used to validate,
/// so a bug there cannot hide here.
struct CubeRootSet {
    unsigned modulus_bits = 0;
    std::uint64_t target = 0;  // reduced mod 2^modulus_bits
    std::vector<std::uint64_t> roots;  // ascending, exhaustive over [0, 2^b)

    bool contains(std::uint64_t s) const;
};

/// All s in [0, 2^b) with s^3 == target (mod 2^b), by exhaustive enumeration.
/// Requires 2 <= b; b > 24 throws CapacityError (the enumeration ceiling).
/// The default entry point splits the range across OpenMP threads; the serial
/// variant is the reference the parallel kernel is tested and benchmarked
/// against. Both return identical, ascending root lists.
CubeRootSet brute_cuberoots_mod_pow2(std::uint64_t target, unsigned modulus_bits);
CubeRootSet brute_cuberoots_mod_pow2_serial(std::uint64_t target, unsigned modulus_bits);

struct OddConstructionReport {
    unsigned trials = 0;
    unsigned passes = 0;
    unsigned failures = 0;
};

/// Cross-validates the odd-case cube-root construction against the enumeration:
/// samples `trials` odd values from the seed, runs odd_cube_root_mod_pow2, and
/// requires membership in the brute-force root set. Any mismatch throws
/// OracleDivergenceError carrying the counterexample.
OddConstructionReport validate_odd_construction(unsigned trials, unsigned modulus_bits,
                                                std::uint64_t seed);

}  // namespace lowbits
