// Compares the OpenMP kernels against their serial references:
//   - brute-force cube-root enumeration (the oracle)
//   - batch forgery + verification trials (the sweep inner loop)
// Usage: bench_kernels [max_enum_bits] [sweep_trials]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "lowbits/forge.hpp"
#include "lowbits/keys.hpp"
#include "lowbits/oracle.hpp"
#include "lowbits/sweep.hpp"
#include "lowbits/transform.hpp"

using namespace lowbits;
namespace chrono = std::chrono;

namespace {

double time_ms(auto&& fn) {
    auto t0 = chrono::steady_clock::now();
    fn();
    return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
}

// min of three runs, after one untimed warmup
double bench_ms(auto&& fn) {
    fn();
    double best = time_ms(fn);
    for (int i = 0; i < 2; ++i) best = std::min(best, time_ms(fn));
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const unsigned max_bits = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 24;
    const unsigned sweep_trials = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 400;

    std::cout << "threads: " << omp_get_max_threads() << "\n\n";

    std::cout << "cube-root enumeration, serial reference vs OpenMP kernel\n";
    std::cout << "   b     serial ms   parallel ms   speedup   roots\n";
    for (unsigned b = 16; b <= max_bits; b += 2) {
        const std::uint64_t target = (0x9e3779b97f4a7c15ULL | 1) & ((1ULL << b) - 1);
        CubeRootSet serial_set, parallel_set;
        const double ts = bench_ms([&] { serial_set = brute_cuberoots_mod_pow2_serial(target, b); });
        const double tp = bench_ms([&] { parallel_set = brute_cuberoots_mod_pow2(target, b); });
        if (serial_set.roots != parallel_set.roots) {
            std::cerr << "KERNEL MISMATCH at b=" << b << "\n";
            return 1;
        }
        std::printf("  %2u  %10.2f    %10.2f    %6.2fx   %zu\n", b, ts, tp, ts / tp,
                    serial_set.roots.size());
    }

    std::cout << "\nbatch forgery + flawed verification, 512-bit modulus, b=96\n";
    RsaKeyPair key = generate_keypair(512, 1);
    const int max_threads = omp_get_max_threads();

    omp_set_num_threads(1);
    const double t1 = bench_ms(
        [&] { run_sweep(key.public_key(), 96, 96, sweep_trials, 2, TransformSpec::sha1_low()); });
    omp_set_num_threads(max_threads);
    const double tn = bench_ms(
        [&] { run_sweep(key.public_key(), 96, 96, sweep_trials, 2, TransformSpec::sha1_low()); });

    std::printf("  trials %u: 1 thread %.2f ms, %d threads %.2f ms, speedup %.2fx\n",
                sweep_trials, t1, max_threads, tn, t1 / tn);
    return 0;
}
