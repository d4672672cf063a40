#include "bchcs/counting.hpp"

#include <bit>
#include <cmath>

#include "bchcs/errors.hpp"

namespace bchcs {

mpz_class kappa(unsigned a, unsigned b) {
    if (b <= a + 1) return mpz_class(b + 1);
    std::vector<mpz_class> k(b + 1);
    for (unsigned i = 0; i <= a + 1 && i <= b; ++i) k[i] = i + 1;
    for (unsigned i = a + 2; i <= b; ++i) k[i] = k[i - 1] + k[i - a - 1];
    return k[b];
}

bool is_spaced_sequence(uint32_t mask, unsigned a, unsigned b, bool circular) {
    if (std::popcount(mask) <= 1) return true;  // no pair of 1s to constrain
    // A gap of >= a zeros between consecutive 1s is the same as no two 1s at
    // (circular) distance <= a, which one shifted AND per distance detects.
    if (circular) {
        const uint32_t width_mask = (b >= 32) ? ~uint32_t(0) : ((uint32_t(1) << b) - 1);
        for (unsigned d = 1; d <= a && d < b; ++d) {
            const uint32_t rot = ((mask >> d) | (mask << (b - d))) & width_mask;
            if (mask & rot) return false;
        }
    } else {
        for (unsigned d = 1; d <= a && d < b; ++d)
            if (mask & (mask >> d)) return false;
    }
    return true;
}

std::vector<uint32_t> enumerate_spaced_sequences(unsigned a, unsigned b, bool circular) {
    if (b > 24) throw LengthTooLargeError("enumeration guarded at length 24");
    std::vector<uint32_t> out;
    const uint32_t top = (b >= 32) ? 0 : (uint32_t(1) << b);
    for (uint32_t mask = 0; mask < top; ++mask)
        if (is_spaced_sequence(mask, a, b, circular)) out.push_back(mask);
    return out;
}

mpz_class tau_closed_form(unsigned a, unsigned b) {
    if (b == 0) return 1;
    // Weight 0 and the always-qualifying weight 1, then for each weight w >= 2
    // count placements around the circle: b * C(b - a*w - 1, w - 1) / w.
    mpz_class total = 1 + b;
    for (unsigned w = 2; static_cast<uint64_t>(w) * (a + 1) <= b; ++w) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), b - a * w - 1, w - 1);
        mpz_class term = binom * b;
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), w);
        total += term;
    }
    return total;
}

mpz_class tau(unsigned a, unsigned b) {
    if (b == 0) return 1;
    if (b <= 24) {
        uint64_t count = 0;
        const uint32_t top = (b >= 32) ? 0 : (uint32_t(1) << b);
        for (uint32_t mask = 0; mask < top; ++mask)
            if (is_spaced_sequence(mask, a, b, true)) ++count;
        return mpz_class(static_cast<unsigned long>(count));
    }
    return tau_closed_form(a, b);
}

double growth_root(unsigned a) {
    // f(1) = -1 < 0 and f(2) = 2^a - 1 >= 0, so [1,2] brackets the root.
    auto f = [a](double z) {
        return std::pow(z, a + 1) - std::pow(z, a) - 1.0;
    };
    double lo = 1.0, hi = 2.0;
    if (f(hi) == 0.0) return hi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

CountingTable build_counting_table(unsigned a, unsigned b_max) {
    CountingTable t;
    t.a = a;
    t.kappa.resize(b_max + 1);
    t.tau.resize(b_max + 1);
    for (unsigned b = 0; b <= b_max && b <= a + 1; ++b) t.kappa[b] = b + 1;
    for (unsigned b = a + 2; b <= b_max; ++b) t.kappa[b] = t.kappa[b - 1] + t.kappa[b - a - 1];
    for (unsigned b = 0; b <= b_max; ++b) t.tau[b] = tau(a, b);
    t.gamma = growth_root(a);
    return t;
}

}  // namespace bchcs
