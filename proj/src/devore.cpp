#include "bchcs/devore.hpp"

#include <cmath>

#include "bchcs/errors.hpp"
#include "bchcs/field.hpp"

namespace bchcs {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t checked_pow(uint32_t base, uint32_t exp, uint64_t limit) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > limit) throw ValidationError("matrix would exceed the 2^20 column guard");
    }
    return v;
}

}  // namespace

SensingMatrix build_devore(const DevoreSpec& spec) {
    if (!is_prime(spec.p)) throw NotPrimeError("p must be prime");
    if (spec.r >= spec.p) throw DegreeTooLargeError("polynomial degree cap must satisfy r < p");
    const uint64_t n = checked_pow(spec.p, spec.r + 1, uint64_t(1) << 20);
    const uint32_t p = spec.p;

    SensingMatrix A(MatrixKind::BIN, p * p, static_cast<uint32_t>(n));
    std::vector<uint32_t> coeff(spec.r + 1, 0);
    for (uint64_t c = 0; c < n; ++c) {
        uint64_t rem = c;
        for (uint32_t t = 0; t <= spec.r; ++t) {
            coeff[t] = static_cast<uint32_t>(rem % p);
            rem /= p;
        }
        for (uint32_t x = 0; x < p; ++x) {
            uint64_t y = 0;
            for (uint32_t t = spec.r + 1; t-- > 0;) y = (y * x + coeff[t]) % p;
            A.set_trit(x * p + static_cast<uint32_t>(y), static_cast<uint32_t>(c), 1);
        }
    }
    A.params = {{"p", std::to_string(spec.p)}, {"r", std::to_string(spec.r)}};
    return A;
}

std::vector<double> mu_embed(const std::vector<uint8_t>& s, const std::vector<double>& x) {
    size_t ones = 0;
    for (uint8_t b : s) ones += (b != 0);
    if (ones != x.size())
        throw LengthMismatchError("pattern weight " + std::to_string(ones) +
                                  " != payload length " + std::to_string(x.size()));
    std::vector<double> y(s.size(), 0.0);
    size_t j = 0;
    for (size_t r = 0; r < s.size(); ++r)
        if (s[r]) y[r] = x[j++];
    return y;
}

SensingMatrix build_ternary(uint32_t k, unsigned m_tilde) {
    const uint32_t p = (uint32_t(1) << m_tilde) - 1;
    // Mersenne exponents up to the m <= 16 cap: 2, 3, 5, 7, 13.
    if (!(m_tilde == 2 || m_tilde == 3 || m_tilde == 5 || m_tilde == 7 || m_tilde == 13) ||
        !is_prime(p))
        throw NotMersenneError("2^m - 1 must be a Mersenne prime (m in {2,3,5,7,13})");
    if (k < 2 || k >= p) throw OrderTooLargeError("RIP order must satisfy 2 <= k < p");

    const uint32_t r = p / k;
    unsigned i = 0;
    while ((uint32_t(1) << i) < k) ++i;  // ceil(log2 k)

    const CodeSpec code = build_code(make_field(m_tilde), i);
    const SensingMatrix X = build_pm1(code);
    const uint64_t x_cols = X.cols();
    const SensingMatrix S = build_devore(DevoreSpec{p, r});
    if (S.cols() * x_cols > (uint64_t(1) << 20))
        throw ValidationError("combined matrix would exceed the 2^20 column guard");

    // The DeVore bound r/p and the code bound (2^{m-i}-1)/p must both stay
    // under 1/(k-1); with r = floor(p/k) and i = ceil(log2 k) this holds, but
    // it is checked per instance rather than assumed.
    const uint32_t code_bound_num = (uint32_t(1) << (m_tilde - i)) - 1;
    if (uint64_t(r) * (k - 1) >= p || uint64_t(code_bound_num) * (k - 1) >= p)
        throw InternalError("component coherence bound reaches 1/(k-1)");

    SensingMatrix A(MatrixKind::TERN, S.rows(), static_cast<uint32_t>(S.cols() * x_cols));
    std::vector<uint32_t> one_rows;
    one_rows.reserve(p);
    for (uint32_t a = 0; a < S.cols(); ++a) {
        one_rows.clear();
        for (uint32_t row = 0; row < S.rows(); ++row)
            if (S.trit(row, a) == 1) one_rows.push_back(row);
        if (one_rows.size() != p) throw InternalError("pattern column weight is not p");
        for (uint32_t b = 0; b < x_cols; ++b) {
            const uint32_t col = a * static_cast<uint32_t>(x_cols) + b;
            for (uint32_t j = 0; j < p; ++j) A.set_trit(one_rows[j], col, X.trit(j, b));
        }
    }
    A.params = {{"p", std::to_string(p)},    {"k", std::to_string(k)},
                {"r", std::to_string(r)},    {"i", std::to_string(i)},
                {"mtilde", std::to_string(m_tilde)}};
    return A;
}

}  // namespace bchcs
