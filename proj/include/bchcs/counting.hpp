#ifndef BCHCS_COUNTING_HPP
#define BCHCS_COUNTING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace bchcs {

/// Sequence counts under a minimum zero-gap constraint between 1 bits.
/// kappa[b]: linear sequences of length b, consecutive 1s separated by >= a
/// zeros. tau[b]: same with the constraint read around a circle. Counts grow
/// geometrically, hence arbitrary precision.
struct CountingTable {
    unsigned a = 0;
    std::vector<mpz_class> kappa;  // index 0..b_max
    std::vector<mpz_class> tau;    // index 0..b_max (tau[0] defined as 1)
    double gamma = 0.0;            // growth root of z^{a+1} - z^a - 1 in (1,2]
};

CountingTable build_counting_table(unsigned a, unsigned b_max);

/// kappa_b^(a) via the memoized recursion kappa_b = kappa_{b-1} + kappa_{b-a-1}
/// with kappa_b = b+1 for b <= a+1.
mpz_class kappa(unsigned a, unsigned b);

/// tau_b^(a): direct enumeration for b <= 24, closed form above
/// (1 + b + sum over weights w >= 2 of (b/w) * C(b - a*w - 1, w - 1)).
mpz_class tau(unsigned a, unsigned b);

/// The closed-form path on its own, exposed for cross-validation against
/// enumeration.
mpz_class tau_closed_form(unsigned a, unsigned b);

/// All qualifying masks of length b, sorted ascending. Guarded at b <= 24
/// (LengthTooLargeError). A sequence of weight <= 1 always qualifies.
std::vector<uint32_t> enumerate_spaced_sequences(unsigned a, unsigned b, bool circular);

/// Single-mask qualification check (the enumeration predicate).
bool is_spaced_sequence(uint32_t mask, unsigned a, unsigned b, bool circular);

/// Real root of z^{a+1} - z^a - 1 in (1,2], bisected to 1e-12.
double growth_root(unsigned a);

}  // namespace bchcs

#endif
