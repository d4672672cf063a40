#include "bchcs/field.hpp"

#include <algorithm>

#include "bchcs/errors.hpp"

namespace bchcs {

FieldContext::FieldContext(unsigned m_tilde, const Gf2Poly& primitive_poly)
    : m_(m_tilde), order_((uint32_t(1) << m_tilde) - 1), poly_(primitive_poly) {
    if (m_tilde < 2 || m_tilde > 16) throw ValidationError("extension degree must be in [2,16]");
    if (poly_.degree() != static_cast<int>(m_tilde))
        throw NotPrimitiveError("polynomial degree does not match extension degree");

    // Fill the tables by walking powers of x mod the polynomial. x is primitive
    // iff the walk visits every nonzero element exactly once before returning
    // to 1; any earlier repeat (or a cycle missing 1) disqualifies the
    // polynomial, covering both reducible and small-order cases.
    log_.assign(size_t(order_) + 1, UINT32_MAX);
    antilog_.assign(order_, 0);
    const uint32_t mask = static_cast<uint32_t>(poly_.low_word());
    uint32_t b = 1;
    for (uint32_t j = 0; j < order_; ++j) {
        if (log_[b] != UINT32_MAX)
            throw NotPrimitiveError("polynomial is not primitive: " + poly_.to_monomials());
        log_[b] = j;
        antilog_[j] = b;
        b <<= 1;
        if (b & (uint32_t(1) << m_tilde)) b ^= mask;
    }
    if (b != 1) throw NotPrimitiveError("polynomial is not primitive: " + poly_.to_monomials());
}

uint32_t FieldContext::log(uint32_t a) const {
    if (a == 0 || a > order_) throw ValidationError("log of zero or out-of-range element");
    return log_[a];
}

uint32_t FieldContext::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const uint64_t le = (uint64_t(log_[a]) * (e % order_)) % order_;
    return antilog_[le];
}

uint32_t FieldContext::inverse(uint32_t a) const {
    if (a == 0) throw ValidationError("inverse of zero");
    return antilog_[(order_ - log_[a]) % order_];
}

uint32_t FieldContext::eval(const Gf2Poly& p, uint32_t x) const {
    uint32_t acc = 0;
    for (int d = p.degree(); d >= 0; --d) {
        acc = mul(acc, x);
        if (p.test(static_cast<size_t>(d))) acc ^= 1;
    }
    return acc;
}

FieldPtr make_field(unsigned m_tilde, const Gf2Poly& primitive_poly) {
    return std::make_shared<const FieldContext>(m_tilde, primitive_poly);
}

FieldPtr make_field(unsigned m_tilde) {
    if (m_tilde < 2 || m_tilde > 16) throw ValidationError("extension degree must be in [2,16]");
    // Candidates need odd constant term; scan masks ascending for determinism.
    const uint64_t lo = uint64_t(1) << m_tilde;
    for (uint64_t c = lo + 1; c < 2 * lo; c += 2) {
        try {
            return std::make_shared<const FieldContext>(m_tilde, Gf2Poly(c));
        } catch (const NotPrimitiveError&) {
        }
    }
    throw InternalError("no primitive polynomial found");  // unreachable for m in [2,16]
}

std::vector<Gf2Poly> primitive_polynomials(unsigned m_tilde) {
    std::vector<Gf2Poly> out;
    const uint64_t lo = uint64_t(1) << m_tilde;
    for (uint64_t c = lo + 1; c < 2 * lo; c += 2) {
        try {
            FieldContext probe(m_tilde, Gf2Poly(c));
            out.emplace_back(c);
        } catch (const NotPrimitiveError&) {
        }
    }
    return out;
}

std::vector<uint32_t> cyclotomic_coset(const FieldContext& ctx, uint32_t e) {
    if (e >= ctx.order()) throw ValidationError("exponent out of range");
    std::vector<uint32_t> coset;
    uint32_t c = e;
    do {
        coset.push_back(c);
        c = uint32_t((uint64_t(c) * 2) % ctx.order());
    } while (c != coset.front());
    std::sort(coset.begin(), coset.end());
    return coset;
}

Gf2Poly minimal_polynomial(const FieldContext& ctx, uint32_t e) {
    const std::vector<uint32_t> coset = cyclotomic_coset(ctx, e);
    // Expand prod (x + alpha^c) with coefficients in the field.
    std::vector<uint32_t> coeffs{1};
    for (uint32_t c : coset) {
        const uint32_t root = ctx.alpha_pow(c);
        std::vector<uint32_t> next(coeffs.size() + 1, 0);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= ctx.mul(coeffs[i], root);
        }
        coeffs.swap(next);
    }
    Gf2Poly p;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1)
            throw InternalError("minimal polynomial has a coefficient outside GF(2)");
        if (coeffs[i]) p.set(i);
    }
    return p;
}

}  // namespace bchcs
