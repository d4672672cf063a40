#include "bchcs/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bchcs/errors.hpp"
#include "bchcs/rng.hpp"

namespace bchcs {

namespace {

// |dot|^2 / (nnz_i * nnz_j) as an exactly comparable pair. Columns here have
// at most 2^20 rows, so the products stay inside unsigned 128-bit comfortably.
struct PairCoherence {
    uint64_t num_sq = 0;  // dot^2
    uint64_t den = 1;     // nnz_i * nnz_j

    bool operator<(const PairCoherence& o) const {
        return (unsigned __int128)num_sq * o.den < (unsigned __int128)o.num_sq * den;
    }
};

Ratio reduce_pair(const PairCoherence& pc) {
    // num_sq is a square by construction. den = nnz_i * nnz_j is one whenever
    // the extreme pair has equal column weights (every built matrix does);
    // otherwise the exact value is dot / sqrt(den).
    const auto dot = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(pc.num_sq))));
    if (dot == 0) return Ratio{0, 1, false};
    const auto root = static_cast<uint64_t>(std::llround(std::sqrt(static_cast<double>(pc.den))));
    if (root * root == pc.den) {
        const int64_t g = std::gcd(dot, static_cast<int64_t>(root));
        return Ratio{dot / g, static_cast<int64_t>(root) / g, false};
    }
    return Ratio{dot, static_cast<int64_t>(pc.den), true};
}

}  // namespace

uint32_t max_rip_order_from(const Ratio& coherence, uint32_t cap) {
    if (coherence.num == 0) return cap;
    uint64_t k;
    if (!coherence.sqrt_den) {
        // (k-1) * num < den  <=>  k <= floor((den-1)/num) + 1
        k = static_cast<uint64_t>((coherence.den - 1) / coherence.num) + 1;
    } else {
        // (k-1) * num / sqrt(den) < 1  <=>  (k-1)^2 * num^2 < den, exactly
        const auto num_sq = static_cast<unsigned __int128>(coherence.num) * coherence.num;
        uint64_t q = static_cast<uint64_t>(
            std::sqrt(static_cast<double>(coherence.den) / static_cast<double>(coherence.num) /
                      static_cast<double>(coherence.num)));
        while ((static_cast<unsigned __int128>(q) * q) * num_sq <
               static_cast<unsigned __int128>(coherence.den))
            ++q;
        while (q > 0 && (static_cast<unsigned __int128>(q) * q) * num_sq >=
                            static_cast<unsigned __int128>(coherence.den))
            --q;
        k = q + 1;
    }
    return static_cast<uint32_t>(std::min<uint64_t>(std::max<uint64_t>(k, 1), cap));
}

AnalysisReport coherence_full(const SensingMatrix& A, Exec exec) {
    if (A.cols() > 8192) throw TooLargeForFullGramError("full Gram guarded at 8192 columns");
    const int64_t n = A.cols();
    const int64_t total = n * (n - 1) / 2;
    PairCoherence best;

    if (exec == Exec::serial) {
        for (int64_t c1 = 0; c1 < n; ++c1)
            for (int64_t c2 = c1 + 1; c2 < n; ++c2) {
                const int64_t d = A.dot(static_cast<uint32_t>(c1), static_cast<uint32_t>(c2));
                const PairCoherence pc{static_cast<uint64_t>(d * d),
                                       uint64_t(A.nnz(c1)) * A.nnz(c2)};
                if (best < pc) best = pc;
            }
    } else {
#pragma omp parallel
        {
            PairCoherence local;
#pragma omp for schedule(dynamic, 16) nowait
            for (int64_t c1 = 0; c1 < n; ++c1)
                for (int64_t c2 = c1 + 1; c2 < n; ++c2) {
                    const int64_t d = A.dot(static_cast<uint32_t>(c1), static_cast<uint32_t>(c2));
                    const PairCoherence pc{static_cast<uint64_t>(d * d),
                                           uint64_t(A.nnz(c1)) * A.nnz(c2)};
                    if (local < pc) local = pc;
                }
#pragma omp critical
            if (best < local) best = local;
        }
    }

    AnalysisReport rep;
    rep.coherence = reduce_pair(best);
    rep.pairs_checked = static_cast<uint64_t>(total);
    rep.max_rip_order = max_rip_order_from(rep.coherence, A.rows());
    return rep;
}

AnalysisReport coherence_sampled(const SensingMatrix& A, uint64_t pair_count, uint64_t seed) {
    if (A.cols() < 2) throw ValidationError("sampling needs at least two columns");
    LcgPairSampler sampler(seed);
    PairCoherence best;
    for (uint64_t t = 0; t < pair_count; ++t) {
        const auto [c1, c2] = sampler.pair(A.cols());
        const int64_t d = A.dot(c1, c2);
        const PairCoherence pc{static_cast<uint64_t>(d * d), uint64_t(A.nnz(c1)) * A.nnz(c2)};
        if (best < pc) best = pc;
    }
    AnalysisReport rep;
    rep.coherence = reduce_pair(best);
    rep.pairs_checked = pair_count;
    rep.max_rip_order = max_rip_order_from(rep.coherence, A.rows());
    rep.sampled = true;
    return rep;
}

namespace {

struct TrialOutcome {
    double min_eig = 1.0;
    double max_eig = 1.0;
    double margin = 0.0;
};

TrialOutcome gershgorin_trial(const SensingMatrix& A, uint32_t k, double delta, uint64_t seed) {
    SplitMix64 rng(seed);
    const std::vector<uint32_t> picks = rng.distinct(k, A.cols());
    Eigen::MatrixXd B(A.rows(), k);
    for (uint32_t j = 0; j < k; ++j) {
        const std::vector<double> col = A.column(picks[j]);
        for (uint32_t r = 0; r < A.rows(); ++r) B(r, j) = col[r];
    }
    const Eigen::MatrixXd gram = B.transpose() * B;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
    TrialOutcome out;
    out.min_eig = solver.eigenvalues().minCoeff();
    out.max_eig = solver.eigenvalues().maxCoeff();
    out.margin = std::min(out.min_eig - (1.0 - delta), (1.0 + delta) - out.max_eig);
    return out;
}

}  // namespace

GershgorinReport gershgorin_check(const SensingMatrix& A, uint32_t k, uint64_t trials,
                                  uint64_t seed, Exec exec) {
    if (k > A.rows()) throw ValidationError("submatrix order exceeds row count");
    if (k == 0 || k > A.cols()) throw ValidationError("submatrix order out of range");
    const double coherence = (A.cols() > 8192)
                                 ? coherence_sampled(A, 100000, seed).coherence.value()
                                 : coherence_full(A).coherence.value();
    const double delta = (k - 1) * coherence;

    GershgorinReport rep;
    rep.k = k;
    rep.trials = trials;
    rep.delta_k = delta;
    double min_eig = 1.0, max_eig = 1.0, worst = std::numeric_limits<double>::infinity();

    if (exec == Exec::serial) {
        for (uint64_t t = 0; t < trials; ++t) {
            const TrialOutcome o = gershgorin_trial(A, k, delta, seed + t);
            min_eig = std::min(min_eig, o.min_eig);
            max_eig = std::max(max_eig, o.max_eig);
            worst = std::min(worst, o.margin);
        }
    } else {
#pragma omp parallel for schedule(dynamic) reduction(min : min_eig, worst) reduction(max : max_eig)
        for (int64_t t = 0; t < static_cast<int64_t>(trials); ++t) {
            const TrialOutcome o = gershgorin_trial(A, k, delta, seed + static_cast<uint64_t>(t));
            min_eig = std::min(min_eig, o.min_eig);
            max_eig = std::max(max_eig, o.max_eig);
            worst = std::min(worst, o.margin);
        }
    }

    rep.min_eigenvalue = min_eig;
    rep.max_eigenvalue = max_eig;
    rep.worst_margin = worst;
    rep.all_within = worst >= -1e-9;
    return rep;
}

}  // namespace bchcs
