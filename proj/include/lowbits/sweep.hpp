#pragma once

#include <cstdint>
#include <vector>

#include "lowbits/keys.hpp"
#include "lowbits/transform.hpp"

namespace lowbits {

struct SweepRow {
    unsigned compare_bits = 0;
    unsigned trials = 0;
    unsigned accepted = 0;  // forgeries the flawed verifier accepted
    unsigned odd_cases = 0;
    unsigned even_cases = 0;
    bool bound_satisfied = false;
};

struct SweepReport {
    unsigned modulus_bits = 0;
    std::uint64_t seed = 0;
    std::vector<SweepRow> rows;
};

/// Forge `trials` seeded random messages at every b in [b_from, b_to] with the
/// out-of-bound override enabled and count flawed-verifier acceptances.
///
/// Rows with bound_satisfied are asserted at 100% acceptance (the construction
/// is proven there; anything else throws InternalCheckError). Rows beyond the
/// bound are measurements, not assertions; failures there are data.
///
/// Trials are keyed by (seed, b, index) and run across OpenMP threads; the
/// report is identical for any thread count.
SweepReport run_sweep(const PublicKey& pub, unsigned b_from, unsigned b_to,
                      unsigned trials, std::uint64_t seed, const TransformSpec& transform);

}  // namespace lowbits
