#include "bchcs/codes.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "bchcs/counting.hpp"
#include "bchcs/errors.hpp"

namespace bchcs {

std::vector<uint32_t> build_h_exponents(const FieldContext& field, unsigned i) {
    const unsigned m = field.m();
    if (i < 1 || i > m) throw ValidationError("zero gap i must be in [1, m]");
    std::vector<uint32_t> exps;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask)
        if (is_spaced_sequence(mask, i, m, true)) exps.push_back(mask);
    // The decimal values double (mod 2^m - 1) under circular shift, so the set
    // must be closed under doubling; anything else indicates a predicate bug.
    const std::set<uint32_t> as_set(exps.begin(), exps.end());
    for (uint32_t e : exps)
        if (!as_set.count(uint32_t((uint64_t(e) * 2) % field.order())))
            throw InternalError("exponent set is not closed under doubling");
    return exps;
}

CodeSpec build_code(FieldPtr field, unsigned i) {
    CodeSpec spec;
    spec.field = std::move(field);
    const FieldContext& ctx = *spec.field;
    const unsigned m = ctx.m();
    if (i < 1 || i > m) throw ValidationError("zero gap i must be in [1, m]");
    spec.i = i;
    spec.l = (m >= i + 1) ? (m - i - 1) : 0;  // i = m collapses onto the l = 0 code
    spec.n_tilde = ctx.order();
    spec.dmin_bound = (uint32_t(1) << (m - 1)) - (uint32_t(1) << spec.l);

    const std::vector<uint32_t> h_exps = build_h_exponents(ctx, i);

    // h = product of the minimal polynomials of one representative per
    // cyclotomic coset inside the exponent set.
    std::set<uint32_t> seen;
    spec.h = Gf2Poly::one();
    for (uint32_t e : h_exps) {
        if (seen.count(e)) continue;
        for (uint32_t c : cyclotomic_coset(ctx, e)) seen.insert(c);
        spec.h = spec.h * minimal_polynomial(ctx, e);
    }
    spec.k_tilde = static_cast<unsigned>(spec.h.degree());
    if (spec.k_tilde != h_exps.size())
        throw InternalError("deg h does not match the exponent set size");

    const Gf2Poly xn1 = Gf2Poly::xn_plus_1(spec.n_tilde);
    auto [q, r] = Gf2Poly::divmod(xn1, spec.h);
    if (!r.is_zero()) throw InternalError("h does not divide x^n + 1");
    spec.g = q;
    if (!Gf2Poly::divmod(spec.h, Gf2Poly(0x3)).second.is_zero())
        throw InternalError("(x+1) does not divide h");
    return spec;
}

std::vector<Codeword> enumerate_even_codewords(const CodeSpec& spec) {
    if (spec.k_tilde > 21) throw TooManyCodewordsError("codeword enumeration guarded at k = 21");
    const Gf2Poly even_gen = Gf2Poly(0x3) * spec.g;  // (x+1) g
    std::vector<Gf2Poly> shifts(spec.k_tilde - 1);
    for (unsigned b = 0; b + 1 < spec.k_tilde; ++b) shifts[b] = even_gen.shifted_left(b);
    const uint32_t count = uint32_t(1) << (spec.k_tilde - 1);
    std::vector<Codeword> words(count);
    for (uint32_t msg = 0; msg < count; ++msg) {
        Gf2Poly cw;
        for (unsigned b = 0; b + 1 < spec.k_tilde; ++b)
            if ((msg >> b) & 1u) cw += shifts[b];
        words[msg] = Codeword{cw, true};
    }
    return words;
}

namespace {

// Minimum codeword weight over the Gray-code window [lo, hi) of message
// indices: consecutive Gray codes differ in one bit, so each step is a single
// shifted xor of g instead of a full rebuild.
uint32_t min_weight_gray_range(const CodeSpec& spec, uint64_t lo, uint64_t hi,
                               const std::vector<Gf2Poly>& g_shifts) {
    uint32_t best = spec.n_tilde + 1;
    Gf2Poly cw;
    uint64_t msg = lo ^ (lo >> 1);
    for (unsigned b = 0; b < spec.k_tilde; ++b)
        if ((msg >> b) & 1u) cw += g_shifts[b];
    for (uint64_t t = lo; t < hi; ++t) {
        if (msg != 0) best = std::min(best, static_cast<uint32_t>(cw.weight()));
        if (t + 1 < hi) {
            const unsigned flip = static_cast<unsigned>(std::countr_zero(t + 1));
            cw += g_shifts[flip];
            msg ^= uint64_t(1) << flip;
        }
    }
    return best;
}

}  // namespace

uint32_t min_distance(const CodeSpec& spec, Exec exec) {
    if (spec.k_tilde > 21) throw TooManyCodewordsError("codeword enumeration guarded at k = 21");
    std::vector<Gf2Poly> g_shifts(spec.k_tilde);
    for (unsigned b = 0; b < spec.k_tilde; ++b) g_shifts[b] = spec.g.shifted_left(b);
    const uint64_t count = uint64_t(1) << spec.k_tilde;
    if (exec == Exec::serial) return min_weight_gray_range(spec, 0, count, g_shifts);

    const int chunks = 64;
    const uint64_t step = (count + chunks - 1) / chunks;
    uint32_t best = spec.n_tilde + 1;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (int c = 0; c < chunks; ++c) {
        const uint64_t lo = uint64_t(c) * step;
        const uint64_t hi = std::min(count, lo + step);
        if (lo < hi) best = std::min(best, min_weight_gray_range(spec, lo, hi, g_shifts));
    }
    return best;
}

std::optional<Gf2Poly> find_table1_primitive(unsigned m_tilde, unsigned i, const Gf2Poly& target_h) {
    for (const Gf2Poly& p : primitive_polynomials(m_tilde)) {
        const CodeSpec spec = build_code(make_field(m_tilde, p), i);
        if (spec.h == target_h) return p;
    }
    return std::nullopt;
}

Gf2Poly rotate_bits(const Gf2Poly& v, uint32_t len, uint32_t shift) {
    Gf2Poly out;
    shift %= len;
    for (uint32_t r = 0; r < len; ++r)
        if (v.test((r + shift) % len)) out.set(r);
    return out;
}

}  // namespace bchcs
