#include "bchcs/recovery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "bchcs/errors.hpp"

namespace bchcs {

namespace {

uint32_t ceil_log2(uint32_t x) {
    uint32_t l = 0;
    while ((uint32_t(1) << l) < x) ++l;
    return l;
}

uint64_t transform_cost(uint32_t points) { return 2ull * points * ceil_log2(points); }

}  // namespace

std::vector<double> correlate_naive(const SensingMatrix& A, const std::vector<double>& r,
                                    uint64_t& mult_count, Exec exec) {
    if (r.size() != A.rows()) throw DimensionMismatchError("residual length != row count");
    mult_count += uint64_t(A.cols()) * A.rows();
    std::vector<double> out(A.cols(), 0.0);

    auto dot_col = [&](uint32_t c) {
        // Signed accumulation straight off the bit planes; equivalent to the
        // dense dot since zero entries contribute nothing.
        const uint64_t* p = A.pos_words(c);
        const uint64_t* n = A.neg_words(c);
        double acc = 0.0;
        for (size_t w = 0; w < A.words_per_col(); ++w) {
            uint64_t bits = p[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                acc += r[w * 64 + static_cast<size_t>(b)];
            }
            bits = n[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                acc -= r[w * 64 + static_cast<size_t>(b)];
            }
        }
        return acc * A.norm_factor(c);
    };

    if (exec == Exec::serial) {
        for (uint32_t c = 0; c < A.cols(); ++c) out[c] = dot_col(c);
    } else {
#pragma omp parallel for schedule(static)
        for (int64_t c = 0; c < static_cast<int64_t>(A.cols()); ++c)
            out[static_cast<size_t>(c)] = dot_col(static_cast<uint32_t>(c));
    }
    return out;
}

CorrelationEngine::CorrelationEngine(const SensingMatrix& A, Backend backend)
    : A_(&A), backend_(backend) {
    if (backend == Backend::naive) return;
    if (!A.orbits) throw BackendUnavailableError("matrix carries no cyclic-orbit metadata");

    const uint32_t m = A.rows();
    std::vector<bool> covered(A.cols(), false);
    plans_.emplace_back(m);

    DftPlan& full_plan = plans_.front();
    for (const OrbitRecord& orb : *A.orbits) {
        if (orb.cols.size() != orb.mu)
            throw BackendUnavailableError("orbit record is missing its column list");
        OrbitSpectrum os;
        os.rep_col = orb.rep_col;
        os.mu = orb.mu;
        os.cols = orb.cols;
        for (uint32_t c : orb.cols) covered[c] = true;

        const std::vector<double> rep = A.column(orb.rep_col);
        std::vector<cplx> x(m);
        for (uint32_t t = 0; t < m; ++t) x[t] = cplx(rep[t], 0.0);
        const std::vector<cplx> spec = full_plan.forward(x);

        // A period-mu column may only have energy at multiples of m/mu; verify
        // and keep those mu values. A violation downgrades the orbit to the
        // direct path instead of failing the whole engine.
        const uint32_t stride = m / orb.mu;
        bool ok = true;
        for (uint32_t f = 0; f < m && ok; ++f)
            if (f % stride != 0 && std::abs(spec[f]) > 1e-9) ok = false;
        os.dft_ok = ok;
        if (ok) {
            os.spectrum.resize(orb.mu);
            for (uint32_t q = 0; q < orb.mu; ++q) os.spectrum[q] = spec[q * stride];
        }
        orbit_spectra_.push_back(std::move(os));
    }
    for (uint32_t c = 0; c < A.cols(); ++c)
        if (!covered[c])
            throw BackendUnavailableError("orbit table does not cover every column");

    plan_of_orbit_.resize(orbit_spectra_.size(), 0);
    for (size_t i = 0; i < orbit_spectra_.size(); ++i) {
        const uint32_t mu = orbit_spectra_[i].mu;
        if (!orbit_spectra_[i].dft_ok) continue;
        size_t found = SIZE_MAX;
        for (size_t p = 0; p < plans_.size(); ++p)
            if (plans_[p].length() == mu) found = p;
        if (found == SIZE_MAX) {
            plans_.emplace_back(mu);
            found = plans_.size() - 1;
        }
        plan_of_orbit_[i] = found;
    }
}

std::vector<double> CorrelationEngine::correlate_dft_path(const std::vector<double>& r,
                                                          uint64_t& mult_count, Exec exec) const {
    const SensingMatrix& A = *A_;
    const uint32_t m = A.rows();
    if (r.size() != m) throw DimensionMismatchError("residual length != row count");

    // One m-point spectrum of the residual per call.
    std::vector<cplx> rc(m);
    for (uint32_t t = 0; t < m; ++t) rc[t] = cplx(r[t], 0.0);
    const std::vector<cplx> r_spec = plans_.front().forward(rc);
    mult_count += transform_cost(m);

    std::vector<double> out(A.cols(), 0.0);
    uint64_t extra = 0;

    auto run_orbit = [&](size_t oi, uint64_t& mults) {
        const OrbitSpectrum& os = orbit_spectra_[oi];
        if (!os.dft_ok) {
            // Direct dots for this orbit only.
            for (uint32_t t = 0; t < os.mu; ++t) {
                const std::vector<double> col = A.column(os.cols[t]);
                double acc = 0.0;
                for (uint32_t row = 0; row < m; ++row) acc += col[row] * r[row];
                out[os.cols[t]] = acc;
            }
            mults += uint64_t(os.mu) * m;
            return;
        }
        // corr[t] = <r, rep rotated left t> is the cyclic cross-correlation;
        // its spectrum is conj(R) .* A, supported on the orbit frequencies, so
        // a mu-point inverse of the downsampled product recovers all mu values
        // (scaled by mu/m).
        const uint32_t stride = m / os.mu;
        std::vector<cplx> prod(os.mu);
        for (uint32_t q = 0; q < os.mu; ++q)
            prod[q] = std::conj(r_spec[q * stride]) * os.spectrum[q];
        const std::vector<cplx> corr = plans_[plan_of_orbit_[oi]].inverse(prod);
        const double scale = static_cast<double>(os.mu) / static_cast<double>(m);
        for (uint32_t t = 0; t < os.mu; ++t) out[os.cols[t]] = corr[t].real() * scale;
        mults += m + transform_cost(os.mu);
    };

    if (exec == Exec::serial) {
        for (size_t oi = 0; oi < orbit_spectra_.size(); ++oi) run_orbit(oi, extra);
    } else {
#pragma omp parallel for schedule(dynamic) reduction(+ : extra)
        for (int64_t oi = 0; oi < static_cast<int64_t>(orbit_spectra_.size()); ++oi) {
            uint64_t local = 0;
            run_orbit(static_cast<size_t>(oi), local);
            extra += local;
        }
    }
    mult_count += extra;
    return out;
}

std::vector<double> CorrelationEngine::correlate(const std::vector<double>& r,
                                                 uint64_t& mult_count, Exec exec) const {
    if (backend_ == Backend::naive) return correlate_naive(*A_, r, mult_count, exec);
    return correlate_dft_path(r, mult_count, exec);
}

std::vector<double> correlate_dft(const CorrelationEngine& engine, const std::vector<double>& r,
                                  uint64_t& mult_count, Exec exec) {
    if (engine.backend() != Backend::dft)
        throw BackendUnavailableError("engine was built for the naive backend");
    return engine.correlate(r, mult_count, exec);
}

CorrelationEngine orbit_spectra(const SensingMatrix& A) {
    return CorrelationEngine(A, Backend::dft);
}

uint64_t naive_pass_cost(const SensingMatrix& A) { return uint64_t(A.cols()) * A.rows(); }

uint64_t dft_pass_cost(const CorrelationEngine& engine) {
    const uint32_t m = engine.matrix().rows();
    uint64_t cost = transform_cost(m);
    for (const OrbitSpectrum& os : engine.orbits())
        cost += os.dft_ok ? (m + transform_cost(os.mu)) : uint64_t(os.mu) * m;
    return cost;
}

RecoveryResult mp_recover(const SensingMatrix& A, const std::vector<double>& y,
                          const MpOptions& opt) {
    if (y.size() != A.rows()) throw DimensionMismatchError("sample length != row count");
    if (opt.k_max < 1) throw ValidationError("k_max must be at least 1");
    if (opt.tol < 0) throw ValidationError("tolerance must be nonnegative");

    const CorrelationEngine engine(A, opt.backend);
    RecoveryResult res;
    res.coefficients.assign(A.cols(), 0.0);

    std::vector<double> residual = y;
    auto l2 = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };
    res.residual_history.push_back(l2(residual));

    Eigen::MatrixXd support_cols;  // ls_refine: m x |support|
    for (uint32_t it = 0; it < opt.k_max; ++it) {
        if (res.residual_history.back() <= opt.tol) break;
        const std::vector<double> corr = engine.correlate(residual, res.mult_count, opt.exec);
        uint32_t pick = 0;
        double best = -1.0;
        for (uint32_t j = 0; j < corr.size(); ++j) {
            const double v = std::abs(corr[j]);
            if (v > best) {  // strict: ties keep the lowest index
                best = v;
                pick = j;
            }
        }
        if (best == 0.0) break;  // residual orthogonal to every column
        ++res.iterations;
        res.selections.push_back(pick);

        const bool fresh = std::find(res.support.begin(), res.support.end(), pick) ==
                           res.support.end();
        if (fresh) res.support.push_back(pick);

        if (opt.mode == RecoveryMode::pure_mp) {
            const std::vector<double> col = A.column(pick);
            res.coefficients[pick] += corr[pick];
            for (uint32_t r = 0; r < A.rows(); ++r) residual[r] -= corr[pick] * col[r];
        } else {
            if (fresh) {
                support_cols.conservativeResize(A.rows(), res.support.size());
                const std::vector<double> col = A.column(pick);
                for (uint32_t r = 0; r < A.rows(); ++r)
                    support_cols(r, static_cast<Eigen::Index>(res.support.size()) - 1) = col[r];
            }
            Eigen::VectorXd rhs(A.rows());
            for (uint32_t r = 0; r < A.rows(); ++r) rhs(r) = y[r];
            const Eigen::VectorXd sol = support_cols.colPivHouseholderQr().solve(rhs);
            const Eigen::VectorXd fit = support_cols * sol;
            for (size_t s = 0; s < res.support.size(); ++s)
                res.coefficients[res.support[s]] = sol(static_cast<Eigen::Index>(s));
            for (uint32_t r = 0; r < A.rows(); ++r) residual[r] = y[r] - fit(r);
        }
        res.residual_history.push_back(l2(residual));
    }
    return res;
}

}  // namespace bchcs
