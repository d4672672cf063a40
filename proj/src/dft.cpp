#include "bchcs/dft.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "bchcs/errors.hpp"

namespace bchcs {

void fft_pow2(std::vector<cplx>& x, bool inverse) {
    const size_t n = x.size();
    if (n <= 1) return;
    if (!std::has_single_bit(n)) throw InternalError("fft_pow2 requires a power-of-two length");

    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                const cplx u = x[i + j];
                const cplx v = x[i + j + len / 2] * w;
                x[i + j] = u + v;
                x[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (cplx& v : x) v /= static_cast<double>(n);
}

DftPlan::DftPlan(uint32_t n) : n_(n) {
    if (n == 0) throw ValidationError("transform length must be positive");
    pow2_ = std::has_single_bit(n);
    if (pow2_) return;

    m_ = static_cast<uint32_t>(std::bit_ceil(uint64_t(2) * n - 1));
    chirp_.resize(n);
    // Phase exponents taken mod 2n keep t^2 exact and the angle small.
    for (uint32_t t = 0; t < n; ++t) {
        const uint64_t q = (uint64_t(t) * t) % (uint64_t(2) * n);
        const double ang = -std::numbers::pi * static_cast<double>(q) / static_cast<double>(n);
        chirp_[t] = cplx(std::cos(ang), std::sin(ang));
    }
    std::vector<cplx> b(m_, cplx(0.0, 0.0));
    b[0] = std::conj(chirp_[0]);
    for (uint32_t t = 1; t < n; ++t) {
        b[t] = std::conj(chirp_[t]);
        b[m_ - t] = std::conj(chirp_[t]);
    }
    fft_pow2(b, false);
    kernel_fft_ = std::move(b);
}

std::vector<cplx> DftPlan::run(const std::vector<cplx>& x, bool inv) const {
    if (x.size() != n_) throw DimensionMismatchError("transform length mismatch");
    if (pow2_) {
        std::vector<cplx> y = x;
        fft_pow2(y, inv);  // inverse already carries the 1/n
        return y;
    }
    // Bluestein: X[f] = conj(w[f]) * sum_t (x[t] conj(w[t])) w[f-t]  with
    // w[t] = exp(-i pi t^2 / n); the sum is a linear convolution carried by a
    // power-of-two cyclic one. The inverse transform conjugates around it.
    std::vector<cplx> a(m_, cplx(0.0, 0.0));
    if (!inv) {
        for (uint32_t t = 0; t < n_; ++t) a[t] = x[t] * chirp_[t];
    } else {
        for (uint32_t t = 0; t < n_; ++t) a[t] = std::conj(x[t]) * chirp_[t];
    }
    fft_pow2(a, false);
    for (uint32_t i = 0; i < m_; ++i) a[i] *= kernel_fft_[i];
    fft_pow2(a, true);
    std::vector<cplx> y(n_);
    if (!inv) {
        for (uint32_t f = 0; f < n_; ++f) y[f] = a[f] * chirp_[f];
    } else {
        for (uint32_t f = 0; f < n_; ++f)
            y[f] = std::conj(a[f] * chirp_[f]) / static_cast<double>(n_);
    }
    return y;
}

std::vector<cplx> DftPlan::forward(const std::vector<cplx>& x) const { return run(x, false); }

std::vector<cplx> DftPlan::inverse(const std::vector<cplx>& X) const { return run(X, true); }

std::vector<cplx> dft_direct(const std::vector<cplx>& x, bool inverse) {
    const size_t n = x.size();
    std::vector<cplx> y(n, cplx(0.0, 0.0));
    const double sign = inverse ? 2.0 : -2.0;
    for (size_t f = 0; f < n; ++f) {
        for (size_t t = 0; t < n; ++t) {
            const uint64_t q = (uint64_t(f) * t) % n;
            const double ang = sign * std::numbers::pi * static_cast<double>(q) / static_cast<double>(n);
            y[f] += x[t] * cplx(std::cos(ang), std::sin(ang));
        }
        if (inverse) y[f] /= static_cast<double>(n);
    }
    return y;
}

}  // namespace bchcs
