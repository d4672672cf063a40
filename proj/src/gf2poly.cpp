#include "bchcs/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "bchcs/errors.hpp"

namespace bchcs {

Gf2Poly::Gf2Poly(uint64_t mask) {
    if (mask != 0) words_.push_back(mask);
}

Gf2Poly Gf2Poly::monomial(size_t e) {
    Gf2Poly p;
    p.set(e);
    return p;
}

Gf2Poly Gf2Poly::xn_plus_1(size_t n) {
    Gf2Poly p;
    p.set(n);
    p.flip(0);
    return p;
}

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int Gf2Poly::degree() const {
    if (words_.empty()) return -1;
    const uint64_t top = words_.back();
    return static_cast<int>((words_.size() - 1) * 64 + (63 - std::countl_zero(top)));
}

size_t Gf2Poly::weight() const {
    size_t w = 0;
    for (uint64_t x : words_) w += std::popcount(x);
    return w;
}

bool Gf2Poly::test(size_t i) const {
    const size_t w = i / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % 64)) & 1u;
}

void Gf2Poly::set(size_t i) {
    const size_t w = i / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= uint64_t(1) << (i % 64);
}

void Gf2Poly::flip(size_t i) {
    const size_t w = i / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= uint64_t(1) << (i % 64);
    trim();
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r = *this;
    r += o;
    return r;
}

Gf2Poly Gf2Poly::shifted_left(size_t n) const {
    if (is_zero() || n == 0) {
        Gf2Poly r = *this;
        return r;
    }
    const size_t word_shift = n / 64, bit_shift = n % 64;
    Gf2Poly r;
    r.words_.assign(words_.size() + word_shift + 1, 0);
    for (size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + word_shift] ^= words_[i] << bit_shift;
        if (bit_shift != 0) r.words_[i + word_shift + 1] ^= words_[i] >> (64 - bit_shift);
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return Gf2Poly();
    // Carry-less schoolbook: xor shifted copies of the wider operand per set bit
    // of the narrower one.
    const Gf2Poly& a = (weight() <= o.weight()) ? *this : o;
    const Gf2Poly& b = (weight() <= o.weight()) ? o : *this;
    Gf2Poly acc;
    acc.words_.assign(words_.size() + o.words_.size(), 0);
    for (size_t w = 0; w < a.words_.size(); ++w) {
        uint64_t bits = a.words_[w];
        while (bits) {
            const int bit = std::countr_zero(bits);
            bits &= bits - 1;
            const size_t n = w * 64 + static_cast<size_t>(bit);
            const size_t word_shift = n / 64, bit_shift = n % 64;
            for (size_t i = 0; i < b.words_.size(); ++i) {
                acc.words_[i + word_shift] ^= b.words_[i] << bit_shift;
                if (bit_shift != 0) acc.words_[i + word_shift + 1] ^= b.words_[i] >> (64 - bit_shift);
            }
        }
    }
    acc.trim();
    return acc;
}

bool Gf2Poly::operator<(const Gf2Poly& o) const {
    if (words_.size() != o.words_.size()) return words_.size() < o.words_.size();
    for (size_t i = words_.size(); i-- > 0;)
        if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Gf2Poly q, r = a;
    const int db = b.degree();
    int dr = r.degree();
    while (dr >= db) {
        const size_t shift = static_cast<size_t>(dr - db);
        q.set(shift);
        r += b.shifted_left(shift);
        dr = r.degree();
    }
    return {q, r};
}

std::string Gf2Poly::to_hex() const {
    if (is_zero()) return "0x0";
    std::ostringstream os;
    os << std::hex << "0x" << words_.back();
    for (size_t i = words_.size() - 1; i-- > 0;) {
        os.width(16);
        os.fill('0');
        os << words_[i];
    }
    return os.str();
}

std::string Gf2Poly::to_monomials() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        if (!test(static_cast<size_t>(d))) continue;
        if (!s.empty()) s += "+";
        if (d == 0)
            s += "1";
        else if (d == 1)
            s += "x";
        else
            s += "x^" + std::to_string(d);
    }
    return s;
}

Gf2Poly Gf2Poly::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ValidationError("empty polynomial literal");
    if (t == "0") return Gf2Poly();
    if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
        Gf2Poly p;
        const std::string hex = t.substr(2);
        for (size_t i = 0; i < hex.size(); ++i) {
            const char c = hex[hex.size() - 1 - i];
            int v;
            if (c >= '0' && c <= '9')
                v = c - '0';
            else if (c >= 'a' && c <= 'f')
                v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                v = c - 'A' + 10;
            else
                throw ValidationError("bad hex digit in polynomial literal: " + t);
            for (int b = 0; b < 4; ++b)
                if (v & (1 << b)) p.set(i * 4 + static_cast<size_t>(b));
        }
        return p;
    }
    // Monomial sum: terms split on '+', each "1", "x", or "x^<d>".
    Gf2Poly p;
    size_t pos = 0;
    while (pos < t.size()) {
        size_t next = t.find('+', pos);
        if (next == std::string::npos) next = t.size();
        const std::string term = t.substr(pos, next - pos);
        if (term == "1")
            p.flip(0);
        else if (term == "x")
            p.flip(1);
        else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            size_t d = 0;
            for (size_t i = 2; i < term.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(term[i])))
                    throw ValidationError("bad exponent in polynomial term: " + term);
                d = d * 10 + static_cast<size_t>(term[i] - '0');
            }
            p.flip(d);
        } else {
            throw ValidationError("bad polynomial term: " + term);
        }
        pos = next + 1;
    }
    return p;
}

}  // namespace bchcs
