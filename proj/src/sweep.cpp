#include "lowbits/sweep.hpp"

#include <stdexcept>
#include <string>

#include "lowbits/errors.hpp"
#include "lowbits/forge.hpp"
#include "lowbits/rng.hpp"
#include "lowbits/verifier.hpp"

namespace lowbits {

namespace {

constexpr std::size_t kSweepMessageBytes = 32;

}  // namespace

SweepReport run_sweep(const PublicKey& pub, unsigned b_from, unsigned b_to,
                      unsigned trials, std::uint64_t seed, const TransformSpec& transform) {
    if (b_from < 8 || b_from > b_to)
        throw std::invalid_argument("run_sweep: need 8 <= b_from <= b_to");

    SweepReport report;
    report.modulus_bits = pub.bit_length;
    report.seed = seed;

    const ForgeOptions force{true};
    for (unsigned b = b_from; b <= b_to; ++b) {
        SweepRow row;
        row.compare_bits = b;
        row.trials = trials;
        row.bound_satisfied = check_bound(b, pub.bit_length);

        VerifierPolicy policy{b, transform};
        unsigned accepted = 0, odd_cases = 0, even_cases = 0;

        #pragma omp parallel for schedule(static) if (trials > 8) \
            reduction(+ : accepted, odd_cases, even_cases)
        for (unsigned i = 0; i < trials; ++i) {
            DeterministicRng rng =
                DeterministicRng::substream(seed, (static_cast<std::uint64_t>(b) << 32) | i);
            const auto message = rng.bytes(kSweepMessageBytes);
            const EncodedMessage M = encode(message, transform, pub);
            M.odd() ? ++odd_cases : ++even_cases;
            const ForgedSignature f =
                M.odd() ? forge_odd(M, b, pub, force) : forge_even(M, b, pub, force);
            bool ok = false;
            try {
                ok = verify_flawed(message, Signature{f.sigma}, pub, policy);
            } catch (const MalformedSignatureError&) {
                ok = false;  // sigma >= n can happen far outside the bound
            }
            if (ok) ++accepted;
        }

        row.accepted = accepted;
        row.odd_cases = odd_cases;
        row.even_cases = even_cases;
        if (row.bound_satisfied && row.accepted != row.trials)
            throw InternalCheckError("run_sweep: in-bound row b=" + std::to_string(b) +
                                     " accepted " + std::to_string(row.accepted) + "/" +
                                     std::to_string(row.trials));
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace lowbits
