// Serial vs OpenMP timing for the data-parallel kernels, plus the naive vs
// frequency-domain correlation comparison. Usage: bench_kernels [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bchcs/analysis.hpp"
#include "bchcs/codes.hpp"
#include "bchcs/field.hpp"
#include "bchcs/recovery.hpp"
#include "bchcs/rng.hpp"
#include "bchcs/sensing_matrix.hpp"

using namespace bchcs;

namespace {

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

void report(const char* name, double serial_s, double parallel_s) {
    std::printf("%-34s serial %9.3f ms   parallel %9.3f ms   speedup %.2fx\n", name,
                serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = (argc > 1) ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; 'parallel' runs the same code serially\n");
#endif

    // 255 x 4096 sign matrix: the heaviest Gram workload under the full guard.
    const CodeSpec c8 = build_code(make_field(8), 3);
    const SensingMatrix a8 = build_pm1(c8);
    std::printf("matrix: %u x %u (m=8, i=3)\n\n", a8.rows(), a8.cols());

    volatile int64_t sink = 0;

    report("coherence full gram",
           time_best_of(reps, [&] { sink = sink + coherence_full(a8, Exec::serial).coherence.num; }),
           time_best_of(reps, [&] { sink = sink + coherence_full(a8, Exec::parallel).coherence.num; }));

    // dimension-21 code: 2^21 codewords, the guard boundary
    const CodeSpec heavy = build_code(make_field(8), 2);
    report("min distance (k=21 brute force)",
           time_best_of(reps, [&] { sink = sink + min_distance(heavy, Exec::serial); }),
           time_best_of(reps, [&] { sink = sink + min_distance(heavy, Exec::parallel); }));

    report("gershgorin 500 trials k=5",
           time_best_of(reps, [&] {
               sink = sink + gershgorin_check(a8, 5, 500, 1, Exec::serial).all_within;
           }),
           time_best_of(reps, [&] {
               sink = sink + gershgorin_check(a8, 5, 500, 1, Exec::parallel).all_within;
           }));

    SplitMix64 rng(12345);
    std::vector<double> r(a8.rows());
    for (double& v : r) v = rng.normal();
    uint64_t mults = 0;
    report("correlation pass (naive)",
           time_best_of(reps, [&] { sink = sink + correlate_naive(a8, r, mults, Exec::serial)[0]; }),
           time_best_of(reps, [&] { sink = sink + correlate_naive(a8, r, mults, Exec::parallel)[0]; }));

    const CorrelationEngine engine(a8, Backend::dft);
    report("correlation pass (dft)",
           time_best_of(reps, [&] { sink = sink + engine.correlate(r, mults, Exec::serial)[0]; }),
           time_best_of(reps, [&] { sink = sink + engine.correlate(r, mults, Exec::parallel)[0]; }));

    uint64_t m1 = 0, m2 = 0;
    correlate_naive(a8, r, m1);
    engine.correlate(r, m2);
    std::printf("\nmodelled multiplications per pass: naive %llu, dft %llu (%.1fx fewer)\n",
                static_cast<unsigned long long>(m1), static_cast<unsigned long long>(m2),
                static_cast<double>(m1) / static_cast<double>(m2));
    return sink == INT64_MIN ? 1 : 0;
}
