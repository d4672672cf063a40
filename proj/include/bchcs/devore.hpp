#ifndef BCHCS_DEVORE_HPP
#define BCHCS_DEVORE_HPP

#include <cstdint>
#include <vector>

#include "bchcs/sensing_matrix.hpp"

namespace bchcs {

/// Parameters of the p^2 x p^{r+1} binary polynomial-graph matrix over GF(p).
struct DevoreSpec {
    uint32_t p = 0;  // prime
    uint32_t r = 0;  // max polynomial degree, r < p
};

/// Rows are pairs (x, y) in GF(p)^2 (row = x*p + y); one column per polynomial
/// of degree <= r, coefficient vector read ascending (column index =
/// sum c_t p^t); entry 1 iff y = P(x). Column weight is exactly p and two
/// distinct columns share at most r ones.
SensingMatrix build_devore(const DevoreSpec& spec);

/// Scatter x into the 1-positions of s (ascending row order); zeros elsewhere.
/// nnz(s) must equal x.size().
std::vector<double> mu_embed(const std::vector<uint8_t>& s, const std::vector<double>& x);

/// The {0,1,-1} combination: p = 2^m_tilde - 1 must be a Mersenne prime,
/// k < p the target RIP order. Sets r = floor(p/k), i = ceil(log2 k), builds
/// the DeVore pattern matrix S (p^2 x p^{r+1}) and the +/-1 matrix X from the
/// code (m_tilde, i), and emits all sign-scattered columns mu(s_a, x_b) with
/// column index a * 2^{k_tilde-1} + b. Coherence stays below 1/(k-1).
SensingMatrix build_ternary(uint32_t k, unsigned m_tilde);

}  // namespace bchcs

#endif
