#ifndef BCHCS_CODES_HPP
#define BCHCS_CODES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bchcs/exec.hpp"
#include "bchcs/field.hpp"
#include "bchcs/gf2poly.hpp"

namespace bchcs {

/// A symmetric cyclic code of length 2^m-1 whose parity-check polynomial h is
/// assembled from the exponent set closed under doubling that corresponds to
/// circularly i-spaced bit sequences. h*g = x^n+1 and (x+1) | h, so the
/// all-ones word is a codeword and codewords pair into complements.
struct CodeSpec {
    FieldPtr field;
    unsigned i = 0;        // minimum circular zero gap (= ceil(log2 k))
    unsigned l = 0;        // m - i - 1, clamped at 0
    uint32_t n_tilde = 0;  // code length 2^m - 1
    Gf2Poly h;             // parity-check polynomial
    Gf2Poly g;             // generator polynomial, g = (x^n + 1) / h
    unsigned k_tilde = 0;  // deg h = code dimension
    uint32_t dmin_bound = 0;  // 2^{m-1} - 2^l
};

struct Codeword {
    Gf2Poly bits;  // n_tilde-bit vector, bit r = coefficient of x^r
    bool even_parity = true;
};

/// Decimal values of all length-m sequences whose 1s are circularly spaced by
/// at least i zeros; closed under doubling mod 2^m-1. 1 <= i <= m.
std::vector<uint32_t> build_h_exponents(const FieldContext& field, unsigned i);

CodeSpec build_code(FieldPtr field, unsigned i);

/// All products message(x) * (x+1) * g(x) over the 2^{k-1} message masks, in
/// message-ascending order. Guarded at k_tilde <= 21 (TooManyCodewordsError).
std::vector<Codeword> enumerate_even_codewords(const CodeSpec& spec);

/// Brute-force minimum Hamming weight over the nonzero codewords of the full
/// code (all messages times g). Same k_tilde <= 21 guard.
uint32_t min_distance(const CodeSpec& spec, Exec exec = Exec::parallel);

/// Scans primitive polynomials of the given degree for one whose build_code
/// parity check equals target_h. Absence is a valid answer.
std::optional<Gf2Poly> find_table1_primitive(unsigned m_tilde, unsigned i, const Gf2Poly& target_h);

/// Left-rotate the low `len` bits of v by `shift` (bit r of the result is bit
/// (r+shift) mod len of v).
Gf2Poly rotate_bits(const Gf2Poly& v, uint32_t len, uint32_t shift);

}  // namespace bchcs

#endif
