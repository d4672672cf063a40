#ifndef BCHCS_RECOVERY_HPP
#define BCHCS_RECOVERY_HPP

#include <cstdint>
#include <vector>

#include "bchcs/dft.hpp"
#include "bchcs/exec.hpp"
#include "bchcs/sensing_matrix.hpp"

namespace bchcs {

enum class Backend { naive, dft };
enum class RecoveryMode { pure_mp, ls_refine };

struct RecoveryResult {
    std::vector<uint32_t> support;      // distinct selected columns, selection order
    std::vector<double> coefficients;   // length n, zero outside support
    std::vector<double> residual_history;  // l2 norms, starting from ||y||
    uint32_t iterations = 0;
    uint64_t mult_count = 0;
    std::vector<uint32_t> selections;   // every per-iteration argmax, repeats included
};

/// Per-orbit frequency data for the cyclic correlation path. A column with mu
/// distinct shifts has period mu | m, so its m-point spectrum lives on the mu
/// frequencies that are multiples of m/mu; only those values are kept.
struct OrbitSpectrum {
    uint32_t rep_col = 0;
    uint32_t mu = 0;
    std::vector<uint32_t> cols;   // cols[t] = column equal to rep rotated left t
    std::vector<cplx> spectrum;   // values at frequencies q * (m/mu), q = 0..mu-1
    bool dft_ok = false;          // false -> this orbit falls back to direct dots
};

class CorrelationEngine {
  public:
    /// Builds the dft backend from the matrix orbit table; requires orbit
    /// coverage of every column (BackendUnavailableError otherwise).
    CorrelationEngine(const SensingMatrix& A, Backend backend);

    Backend backend() const { return backend_; }
    const SensingMatrix& matrix() const { return *A_; }
    const std::vector<OrbitSpectrum>& orbits() const { return orbit_spectra_; }

    /// <r, a_j> for every column j; identical between backends to 1e-9.
    /// Multiplication counts follow the instrumentation model described in
    /// correlate_naive / correlate_dft.
    std::vector<double> correlate(const std::vector<double>& r, uint64_t& mult_count,
                                  Exec exec = Exec::parallel) const;

  private:
    std::vector<double> correlate_dft_path(const std::vector<double>& r,
                                           uint64_t& mult_count, Exec exec) const;

    const SensingMatrix* A_;
    Backend backend_;
    std::vector<OrbitSpectrum> orbit_spectra_;
    std::vector<DftPlan> plans_;          // plans_[0] is the m-point plan
    std::vector<size_t> plan_of_orbit_;   // index into plans_ per orbit
};

/// Dense reference correlation: out[j] = <r, a_j> over normalized columns.
/// Charges n*m multiplications.
std::vector<double> correlate_naive(const SensingMatrix& A, const std::vector<double>& r,
                                    uint64_t& mult_count, Exec exec = Exec::parallel);

/// Frequency-domain correlation per cyclic orbit. Charges one m-point
/// transform (2m ceil(log2 m)) for the residual spectrum, then per orbit one
/// pointwise spectral product (m) and one mu-point inverse transform
/// (2 mu ceil(log2 mu)); non-cyclic fallback orbits charge mu*m.
std::vector<double> correlate_dft(const CorrelationEngine& engine, const std::vector<double>& r,
                                  uint64_t& mult_count, Exec exec = Exec::parallel);

/// Builds the per-orbit spectra (the dft-backend constructor path).
CorrelationEngine orbit_spectra(const SensingMatrix& A);

struct MpOptions {
    uint32_t k_max = 1;
    double tol = 1e-10;
    RecoveryMode mode = RecoveryMode::ls_refine;
    Backend backend = Backend::naive;
    Exec exec = Exec::parallel;
};

/// Greedy matching pursuit on y = A s. Each iteration correlates the residual
/// against all columns and takes the largest magnitude (ties -> lowest column
/// index). pure_mp subtracts the rank-one update; ls_refine re-solves least
/// squares on the selected support, keeping the residual orthogonal to it.
RecoveryResult mp_recover(const SensingMatrix& A, const std::vector<double>& y,
                          const MpOptions& opt);

/// Per-full-pass multiplication counts of both backends for this matrix, from
/// the instrumentation model (no correlation is run).
uint64_t naive_pass_cost(const SensingMatrix& A);
uint64_t dft_pass_cost(const CorrelationEngine& engine);

}  // namespace bchcs

#endif
