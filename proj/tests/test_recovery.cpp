#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "bchcs/analysis.hpp"
#include "bchcs/codes.hpp"
#include "bchcs/devore.hpp"
#include "bchcs/errors.hpp"
#include "bchcs/recovery.hpp"
#include "bchcs/rng.hpp"
#include "bchcs/sensing_matrix.hpp"

using namespace bchcs;

namespace {

SensingMatrix pm1(unsigned m, unsigned i) { return build_pm1(build_code(make_field(m), i)); }

std::vector<double> random_residual(uint32_t m, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> r(m);
    for (double& v : r) v = rng.normal();
    return r;
}

std::vector<double> synthesize(const SensingMatrix& A, const std::vector<uint32_t>& support,
                               const std::vector<double>& amps) {
    std::vector<double> y(A.rows(), 0.0);
    for (size_t j = 0; j < support.size(); ++j) {
        const std::vector<double> col = A.column(support[j]);
        for (uint32_t r = 0; r < A.rows(); ++r) y[r] += amps[j] * col[r];
    }
    return y;
}

}  // namespace

TEST_CASE("naive correlation identities") {
    const SensingMatrix A = pm1(4, 3);
    const double coh = coherence_full(A).coherence.value();
    uint64_t mults = 0;

    for (uint32_t j : {0u, 5u, 15u}) {
        const auto out = correlate_naive(A, A.column(j), mults);
        CHECK(out[j] == doctest::Approx(1.0).epsilon(1e-12));
        for (uint32_t c = 0; c < A.cols(); ++c)
            if (c != j) CHECK(std::abs(out[c]) <= coh + 1e-12);
    }

    const auto zero = correlate_naive(A, std::vector<double>(15, 0.0), mults);
    for (double v : zero) CHECK(v == 0.0);

    // r = a_1 + a_2: gram row sums give exactly 1 - 1/15 at both columns
    std::vector<double> r(A.rows());
    const auto c1 = A.column(1), c2 = A.column(2);
    for (uint32_t t = 0; t < A.rows(); ++t) r[t] = c1[t] + c2[t];
    const auto out = correlate_naive(A, r, mults);
    CHECK(out[1] == doctest::Approx(1.0 - 1.0 / 15.0).epsilon(1e-12));
    CHECK(out[2] == doctest::Approx(1.0 - 1.0 / 15.0).epsilon(1e-12));

    CHECK_THROWS_AS(correlate_naive(A, std::vector<double>(14, 0.0), mults),
                    DimensionMismatchError);
}

TEST_CASE("naive correlation counts n*m per pass and matches serial") {
    const SensingMatrix A = pm1(6, 3);
    uint64_t mults = 0;
    const auto r = random_residual(63, 17);
    const auto par = correlate_naive(A, r, mults, Exec::parallel);
    CHECK(mults == 64u * 63u);
    uint64_t m2 = 0;
    const auto ser = correlate_naive(A, r, m2, Exec::serial);
    for (uint32_t c = 0; c < A.cols(); ++c) CHECK(par[c] == ser[c]);
}

TEST_CASE("orbit spectra structure") {
    const SensingMatrix A = pm1(4, 3);
    const CorrelationEngine engine = orbit_spectra(A);
    for (const OrbitSpectrum& os : engine.orbits()) {
        CHECK(os.dft_ok);
        CHECK(os.spectrum.size() == os.mu);
        if (os.mu == 1) {
            // constant column: only the dc bin, value sum/sqrt(m) = -sqrt(m)
            CHECK(std::abs(os.spectrum[0].real() + std::sqrt(15.0)) < 1e-9);
            CHECK(std::abs(os.spectrum[0].imag()) < 1e-12);
        }
    }

    // pseudo-noise orbit of the m=3 square: all 7 bins carry energy
    const SensingMatrix A3 = pm1(3, 3);
    const CorrelationEngine e3 = orbit_spectra(A3);
    for (const OrbitSpectrum& os : e3.orbits())
        if (os.mu == 7)
            for (const cplx& v : os.spectrum) CHECK(std::abs(v) > 1e-9);

    // equi-spacing: spectra of the m=6 matrix live on multiples of m/mu;
    // verified against the full-length transform
    const SensingMatrix A6 = pm1(6, 3);
    const CorrelationEngine e6 = orbit_spectra(A6);
    const DftPlan full(63);
    for (const OrbitSpectrum& os : e6.orbits()) {
        const auto col = A6.column(os.rep_col);
        std::vector<cplx> x(63);
        for (uint32_t t = 0; t < 63; ++t) x[t] = cplx(col[t], 0.0);
        const auto spec = full.forward(x);
        const uint32_t stride = 63 / os.mu;
        for (uint32_t f = 0; f < 63; ++f)
            if (f % stride != 0) CHECK(std::abs(spec[f]) < 1e-9);
    }
}

TEST_CASE("dft correlation equals naive") {
    // every buildable sign matrix up to 255 rows, including the m=8 one whose
    // orbits mix several sizes
    struct Params {
        unsigned m, i;
        int trials;
    };
    for (const Params p : {Params{3, 3, 100}, Params{4, 3, 100}, Params{5, 2, 100},
                           Params{6, 3, 100}, Params{6, 2, 50}, Params{8, 3, 20}}) {
        const SensingMatrix A = pm1(p.m, p.i);
        const CorrelationEngine engine(A, Backend::dft);
        double worst = 0.0;
        for (int trial = 0; trial < p.trials; ++trial) {
            const auto r = random_residual(A.rows(), 500 * p.m + 17 * p.i + trial);
            uint64_t m1 = 0, m2 = 0;
            const auto naive = correlate_naive(A, r, m1);
            const auto fast = correlate_dft(engine, r, m2);
            for (uint32_t c = 0; c < A.cols(); ++c)
                worst = std::max(worst, std::abs(naive[c] - fast[c]));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("dft and serial dft agree") {
    const SensingMatrix A = pm1(6, 3);
    const CorrelationEngine engine(A, Backend::dft);
    const auto r = random_residual(63, 321);
    uint64_t m1 = 0, m2 = 0;
    const auto a = engine.correlate(r, m1, Exec::serial);
    const auto b = engine.correlate(r, m2, Exec::parallel);
    CHECK(m1 == m2);
    for (size_t c = 0; c < a.size(); ++c) CHECK(a[c] == b[c]);
}

TEST_CASE("constant-column correlation is the scaled residual sum") {
    const SensingMatrix A = pm1(4, 3);
    const CorrelationEngine engine(A, Backend::dft);
    const auto r = random_residual(15, 777);
    double sum = 0.0;
    for (double v : r) sum += v;
    uint64_t mults = 0;
    const auto out = correlate_dft(engine, r, mults);
    // column 0 is the zero codeword mapped to all -1/sqrt(15)
    CHECK(out[0] == doctest::Approx(-sum / std::sqrt(15.0)).epsilon(1e-10));
}

TEST_CASE("multiplication accounting favors the dft backend") {
    const SensingMatrix A = pm1(6, 3);
    const CorrelationEngine engine(A, Backend::dft);
    CHECK(naive_pass_cost(A) == 64u * 63u);
    CHECK(dft_pass_cost(engine) < naive_pass_cost(A));

    const auto r = random_residual(63, 5);
    uint64_t used = 0;
    engine.correlate(r, used);
    CHECK(used == dft_pass_cost(engine));
}

TEST_CASE("dft backend requires orbit metadata") {
    const SensingMatrix d = build_devore(DevoreSpec{3, 1});
    CHECK_THROWS_AS(CorrelationEngine(d, Backend::dft), BackendUnavailableError);
    MpOptions opt;
    opt.backend = Backend::dft;
    opt.k_max = 2;
    CHECK_THROWS_AS(mp_recover(d, std::vector<double>(9, 1.0), opt), BackendUnavailableError);
}

TEST_CASE("one-sparse recovery in one iteration") {
    const SensingMatrix A = pm1(4, 3);
    for (Backend backend : {Backend::naive, Backend::dft})
        for (RecoveryMode mode : {RecoveryMode::pure_mp, RecoveryMode::ls_refine}) {
            MpOptions opt;
            opt.k_max = 4;
            opt.backend = backend;
            opt.mode = mode;
            std::vector<double> y = A.column(5);
            for (double& v : y) v *= -2.5;
            const RecoveryResult res = mp_recover(A, y, opt);
            CHECK(res.support == std::vector<uint32_t>{5});
            CHECK(res.iterations == 1);
            CHECK(res.coefficients[5] == doctest::Approx(-2.5).epsilon(1e-10));
            CHECK(res.residual_history.back() < 1e-9);
        }
}

TEST_CASE("ties break to the lowest column index") {
    const SensingMatrix A = pm1(4, 3);
    std::vector<double> y(A.rows());
    const auto c1 = A.column(1), c2 = A.column(2);
    for (uint32_t t = 0; t < A.rows(); ++t) y[t] = c1[t] + c2[t];
    MpOptions opt;
    opt.k_max = 1;
    opt.mode = RecoveryMode::pure_mp;
    const RecoveryResult res = mp_recover(A, y, opt);
    CHECK(res.selections == std::vector<uint32_t>{1});
}

TEST_CASE("ls refine recovers k=4 supports exactly on the m=6 matrix") {
    const SensingMatrix A = pm1(6, 3);
    // coherence 1/9 < 1/(2k-1) = 1/7 gives the exact-selection guarantee
    const uint32_t k = 4;
    for (Backend backend : {Backend::naive, Backend::dft}) {
        MpOptions opt;
        opt.k_max = 4 * k;
        opt.backend = backend;
        opt.mode = RecoveryMode::ls_refine;
        for (uint64_t trial = 0; trial < 50; ++trial) {
            SplitMix64 rng(9000 + trial);
            std::vector<uint32_t> support = rng.distinct(k, A.cols());
            std::vector<double> amps(k);
            for (double& a : amps) a = rng.normal();
            const auto y = synthesize(A, support, amps);
            const RecoveryResult res = mp_recover(A, y, opt);

            std::vector<uint32_t> got = res.support, want = support;
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
            CHECK(res.residual_history.back() < 1e-9);
            for (uint32_t sel : res.selections)
                CHECK(std::find(want.begin(), want.end(), sel) != want.end());
        }
    }
}

TEST_CASE("pure mp only ever selects true-support columns in the guaranteed regime") {
    const SensingMatrix A = pm1(6, 3);
    const uint32_t k = 4;
    MpOptions opt;
    opt.k_max = 4 * k;
    opt.mode = RecoveryMode::pure_mp;
    for (uint64_t trial = 0; trial < 50; ++trial) {
        SplitMix64 rng(41000 + trial);
        std::vector<uint32_t> support = rng.distinct(k, A.cols());
        std::vector<double> amps(k);
        for (double& a : amps) a = rng.normal();
        const auto y = synthesize(A, support, amps);
        const RecoveryResult res = mp_recover(A, y, opt);
        std::set<uint32_t> want(support.begin(), support.end());
        for (uint32_t sel : res.selections) CHECK(want.count(sel) == 1);
        // noiseless matching pursuit strictly shrinks the residual
        for (size_t h = 1; h < res.residual_history.size(); ++h)
            CHECK(res.residual_history[h] < res.residual_history[h - 1]);
    }
}

TEST_CASE("ls refine keeps the residual orthogonal to the selected columns") {
    const SensingMatrix A = pm1(6, 3);
    MpOptions opt;
    opt.k_max = 6;
    opt.mode = RecoveryMode::ls_refine;
    opt.tol = 0.0;  // run all iterations
    SplitMix64 rng(31337);
    std::vector<uint32_t> support = rng.distinct(6, A.cols());
    std::vector<double> amps(6);
    for (double& a : amps) a = rng.normal();
    const auto y = synthesize(A, support, amps);
    const RecoveryResult res = mp_recover(A, y, opt);

    // reconstruct the final residual and check orthogonality
    std::vector<double> residual = y;
    for (uint32_t c : res.support) {
        const auto col = A.column(c);
        for (uint32_t r = 0; r < A.rows(); ++r) residual[r] -= res.coefficients[c] * col[r];
    }
    for (uint32_t c : res.support) {
        const auto col = A.column(c);
        double ip = 0.0;
        for (uint32_t r = 0; r < A.rows(); ++r) ip += residual[r] * col[r];
        CHECK(std::abs(ip) < 1e-9);
    }
}

TEST_CASE("beyond the guarantee the solver still terminates and reports") {
    const SensingMatrix A = pm1(6, 3);  // coherence 1/9 >= 1/(2*6-1)
    const uint32_t k = 6;
    MpOptions opt;
    opt.k_max = 4 * k;
    opt.mode = RecoveryMode::pure_mp;
    SplitMix64 rng(777);
    std::vector<uint32_t> support = rng.distinct(k, A.cols());
    std::vector<double> amps(k);
    for (double& a : amps) a = rng.normal();
    const RecoveryResult res = mp_recover(A, synthesize(A, support, amps), opt);
    CHECK(res.iterations <= opt.k_max);
    CHECK(std::isfinite(res.residual_history.back()));
}

TEST_CASE("recovery dimension checks") {
    const SensingMatrix A = pm1(4, 3);
    MpOptions opt;
    opt.k_max = 1;
    CHECK_THROWS_AS(mp_recover(A, std::vector<double>(14, 0.0), opt), DimensionMismatchError);
}
