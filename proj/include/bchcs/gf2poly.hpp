#ifndef BCHCS_GF2POLY_HPP
#define BCHCS_GF2POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bchcs {

/// Polynomial over GF(2), stored as a coefficient bitmask (bit i = coeff of x^i).
/// The zero polynomial has an empty mask and degree() == -1.
class Gf2Poly {
  public:
    Gf2Poly() = default;
    explicit Gf2Poly(uint64_t mask);

    static Gf2Poly zero() { return Gf2Poly(); }
    static Gf2Poly one() { return Gf2Poly(1); }
    /// x^e
    static Gf2Poly monomial(size_t e);
    /// x^n + 1
    static Gf2Poly xn_plus_1(size_t n);

    bool is_zero() const { return words_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    size_t weight() const;

    bool test(size_t i) const;
    void set(size_t i);
    void flip(size_t i);

    Gf2Poly operator+(const Gf2Poly& o) const;  // XOR; subtraction is identical
    Gf2Poly& operator+=(const Gf2Poly& o);
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly shifted_left(size_t n) const;  // * x^n

    bool operator==(const Gf2Poly& o) const { return words_ == o.words_; }
    bool operator!=(const Gf2Poly& o) const { return words_ != o.words_; }
    bool operator<(const Gf2Poly& o) const;  // by value of the coefficient mask

    /// Long division: returns (quotient, remainder) with deg r < deg b.
    /// Throws DivisionByZeroError if b is zero.
    static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b);

    /// Hexadecimal coefficient mask, e.g. x^4+x+1 -> "0x13".
    std::string to_hex() const;
    /// Monomial sum, e.g. "x^4+x+1"; "0" for the zero polynomial.
    std::string to_monomials() const;
    /// Accepts both forms ("0x13" or "x^4+x+1"); throws ValidationError.
    static Gf2Poly parse(const std::string& text);

    const std::vector<uint64_t>& words() const { return words_; }
    uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  private:
    void trim();
    std::vector<uint64_t> words_;
};

}  // namespace bchcs

#endif
