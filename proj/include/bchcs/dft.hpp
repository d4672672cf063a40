#ifndef BCHCS_DFT_HPP
#define BCHCS_DFT_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace bchcs {

using cplx = std::complex<double>;

/// In-place radix-2 FFT; n must be a power of two.
void fft_pow2(std::vector<cplx>& x, bool inverse);

/// Arbitrary-length transform plan. Power-of-two lengths run the radix-2
/// kernel directly; odd lengths (every 2^m - 1 here) go through Bluestein's
/// chirp factorization n-point DFT = chirp * (M-point convolution) * chirp
/// with M the next power of two >= 2n-1.
class DftPlan {
  public:
    explicit DftPlan(uint32_t n);

    uint32_t length() const { return n_; }

    /// Unnormalized forward DFT: X[f] = sum_t x[t] exp(-2*pi*i*f*t/n).
    std::vector<cplx> forward(const std::vector<cplx>& x) const;
    /// Inverse with 1/n: x[t] = (1/n) sum_f X[f] exp(+2*pi*i*f*t/n).
    std::vector<cplx> inverse(const std::vector<cplx>& X) const;

  private:
    std::vector<cplx> run(const std::vector<cplx>& x, bool inv) const;

    uint32_t n_ = 0;
    bool pow2_ = false;
    uint32_t m_ = 0;                 // Bluestein convolution length
    std::vector<cplx> chirp_;        // w[t] = exp(-i*pi*t^2/n)
    std::vector<cplx> kernel_fft_;   // FFT of the zero-padded conjugate chirp
};

/// O(n^2) reference used to validate the fast paths.
std::vector<cplx> dft_direct(const std::vector<cplx>& x, bool inverse);

}  // namespace bchcs

#endif
