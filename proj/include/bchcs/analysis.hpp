#ifndef BCHCS_ANALYSIS_HPP
#define BCHCS_ANALYSIS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bchcs/exec.hpp"
#include "bchcs/sensing_matrix.hpp"

namespace bchcs {

/// Exact coherence value: num/den for columns of equal weight (the usual
/// case, kept as a reduced fraction), num/sqrt(den) when the extreme pair has
/// mixed column weights.
struct Ratio {
    int64_t num = 0;
    int64_t den = 1;
    bool sqrt_den = false;

    double value() const {
        const auto d = static_cast<double>(den);
        return static_cast<double>(num) / (sqrt_den ? std::sqrt(d) : d);
    }
    std::string str() const {
        if (!sqrt_den) return std::to_string(num) + "/" + std::to_string(den);
        return std::to_string(num) + "/sqrt(" + std::to_string(den) + ")";
    }
};

struct AnalysisReport {
    Ratio coherence;             // max |<a_i, a_j>| over i != j, exact
    uint32_t max_rip_order = 1;  // largest k with (k-1) * coherence < 1
    bool sampled = false;        // true -> coherence is a lower bound
    uint64_t pairs_checked = 0;

    double delta_k(uint32_t k) const { return (k - 1) * coherence.value(); }
};

/// Exact coherence over all column pairs. Full mode is guarded at n <= 8192
/// (TooLargeForFullGramError).
AnalysisReport coherence_full(const SensingMatrix& A, Exec exec = Exec::parallel);

/// Seeded LCG pair sampling; reports a coherence lower bound.
AnalysisReport coherence_sampled(const SensingMatrix& A, uint64_t pair_count, uint64_t seed);

struct GershgorinReport {
    uint32_t k = 0;
    uint64_t trials = 0;
    double delta_k = 0.0;  // (k-1) * coherence
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    bool all_within = false;  // every eigenvalue inside [1-delta_k, 1+delta_k]
    double worst_margin = 0.0;  // min over trials of distance to interval ends
};

/// Samples `trials` random k-column submatrices and eigen-solves each Gram
/// matrix; failures falsify the coherence-based RIP constant and are reported,
/// not thrown.
GershgorinReport gershgorin_check(const SensingMatrix& A, uint32_t k, uint64_t trials,
                                  uint64_t seed, Exec exec = Exec::parallel);

/// Largest k with (k-1)*num/den < 1, capped at cap (0 num means orthogonal
/// columns, reported as the cap itself).
uint32_t max_rip_order_from(const Ratio& coherence, uint32_t cap);

}  // namespace bchcs

#endif
