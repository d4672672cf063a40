#ifndef BCHCS_FIELD_HPP
#define BCHCS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "bchcs/gf2poly.hpp"

namespace bchcs {

/// GF(2^m) in the polynomial basis. Elements are m-bit masks; products go
/// through log/antilog tables indexed by the exponent of the primitive root
/// alpha (= the class of x). Immutable after construction, safe to share.
class FieldContext {
  public:
    /// Builds tables and verifies the polynomial is primitive (irreducible with
    /// a root of multiplicative order 2^m-1). Throws NotPrimitiveError.
    FieldContext(unsigned m_tilde, const Gf2Poly& primitive_poly);

    unsigned m() const { return m_; }
    uint32_t order() const { return order_; }  // 2^m - 1
    const Gf2Poly& primitive_poly() const { return poly_; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % order_];
    }
    static uint32_t add(uint32_t a, uint32_t b) { return a ^ b; }
    uint32_t alpha_pow(uint32_t e) const { return antilog_[e % order_]; }
    uint32_t log(uint32_t a) const;  // throws on 0
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inverse(uint32_t a) const;

    /// Evaluate a GF(2)[x] polynomial at a field element.
    uint32_t eval(const Gf2Poly& p, uint32_t x) const;

  private:
    unsigned m_;
    uint32_t order_;
    Gf2Poly poly_;
    std::vector<uint32_t> log_;      // element -> exponent, index 0 unused
    std::vector<uint32_t> antilog_;  // exponent -> element
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// 2 <= m_tilde <= 16. Without an explicit polynomial, picks the
/// lexicographically smallest primitive polynomial of that degree.
FieldPtr make_field(unsigned m_tilde);
FieldPtr make_field(unsigned m_tilde, const Gf2Poly& primitive_poly);

/// All primitive polynomials of the given degree, ascending by mask.
std::vector<Gf2Poly> primitive_polynomials(unsigned m_tilde);

/// Orbit of e under doubling mod 2^m-1, sorted ascending. Size divides m.
std::vector<uint32_t> cyclotomic_coset(const FieldContext& ctx, uint32_t e);

/// Product of (x - alpha^c) over the coset of e, expanded in the field; the
/// result must land in GF(2)[x] (InternalError otherwise).
Gf2Poly minimal_polynomial(const FieldContext& ctx, uint32_t e);

}  // namespace bchcs

#endif
