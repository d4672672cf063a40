#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bchcs/errors.hpp"
#include "bchcs/field.hpp"
#include "bchcs/gf2poly.hpp"

using namespace bchcs;

namespace {

// Reference carry-less multiply mod a polynomial mask, independent of the
// log/antilog tables it is used to check.
uint32_t ref_clmul_mod(uint32_t a, uint32_t b, uint32_t poly_mask, unsigned m) {
    uint32_t acc = 0;
    while (b) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (uint32_t(1) << m)) a ^= poly_mask;
    }
    return acc;
}

// Multiplicative order of x mod the polynomial, by exhaustive multiplication.
uint32_t ref_order_of_x(uint32_t poly_mask, unsigned m) {
    uint32_t v = 2 % (uint32_t(1) << m);
    for (uint32_t ord = 1; ord <= (uint32_t(1) << m); ++ord) {
        if (v == 1) return ord;
        v = ref_clmul_mod(v, 2, poly_mask, m);
    }
    return 0;
}

}  // namespace

TEST_CASE("gf2 polynomial basics") {
    const Gf2Poly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    const Gf2Poly p = Gf2Poly::parse("x^4+x+1");
    CHECK(p.degree() == 4);
    CHECK(p.low_word() == 0x13);
    CHECK((p + p).is_zero());
    CHECK(Gf2Poly::parse("0x13") == p);
    CHECK(p.to_hex() == "0x13");
    CHECK(p.to_monomials() == "x^4+x+1");
    CHECK(Gf2Poly::parse(p.to_monomials()) == p);

    const Gf2Poly big = Gf2Poly::xn_plus_1(100);
    CHECK(big.degree() == 100);
    CHECK(big.weight() == 2);
    CHECK(Gf2Poly::parse(big.to_hex()) == big);

    CHECK(Gf2Poly::parse("0").is_zero());
    CHECK(Gf2Poly::parse("0x0").is_zero());
    CHECK(zero.to_monomials() == "0");
    CHECK_THROWS_AS(Gf2Poly::parse("x^two"), ValidationError);
}

TEST_CASE("gf2 polynomial multiplication and division are inverse") {
    // (x^3+1) / (x+1) = x^2+x+1 exactly
    auto [q, r] = Gf2Poly::divmod(Gf2Poly(0b1001), Gf2Poly(0b11));
    CHECK(q == Gf2Poly(0b111));
    CHECK(r.is_zero());

    // a / a = (1, 0)
    const Gf2Poly a = Gf2Poly::parse("x^7+x^3+x+1");
    auto [qa, ra] = Gf2Poly::divmod(a, a);
    CHECK(qa == Gf2Poly::one());
    CHECK(ra.is_zero());

    // x^15+1 by the reference h of the (m=4, i=3) code: remainder 0, deg q = 10
    auto [qh, rh] = Gf2Poly::divmod(Gf2Poly::xn_plus_1(15), Gf2Poly::parse("x^5+x^4+x^2+1"));
    CHECK(rh.is_zero());
    CHECK(qh.degree() == 10);

    CHECK_THROWS_AS(Gf2Poly::divmod(a, Gf2Poly::zero()), DivisionByZeroError);

    // reconstruction property a = q*b + r on a mask sweep
    for (uint64_t am = 1; am < 300; am += 7)
        for (uint64_t bm = 1; bm < 80; bm += 3) {
            const Gf2Poly pa(am), pb(bm);
            auto [pq, pr] = Gf2Poly::divmod(pa, pb);
            CHECK(pq * pb + pr == pa);
            CHECK(pr.degree() < pb.degree());
        }
}

TEST_CASE("field construction verifies primitivity") {
    const FieldPtr f16 = make_field(4, Gf2Poly(0x13));
    CHECK(f16->order() == 15);
    CHECK(ref_order_of_x(0x13, 4) == 15);

    // x^4+x^3+x^2+x+1 has a root of order 5
    CHECK(ref_order_of_x(0x1f, 4) == 5);
    CHECK_THROWS_AS(make_field(4, Gf2Poly(0x1f)), NotPrimitiveError);

    const FieldPtr f4 = make_field(2, Gf2Poly(0x7));
    CHECK(f4->order() == 3);

    CHECK_THROWS_AS(make_field(1), ValidationError);
    CHECK_THROWS_AS(make_field(17), ValidationError);
    CHECK_THROWS_AS(make_field(4, Gf2Poly(0x7)), NotPrimitiveError);  // degree mismatch
}

TEST_CASE("default polynomial is the smallest primitive one") {
    CHECK(make_field(4)->primitive_poly() == Gf2Poly(0x13));   // x^4+x+1
    CHECK(make_field(6)->primitive_poly() == Gf2Poly(0x43));   // x^6+x+1
    CHECK(make_field(2)->primitive_poly() == Gf2Poly(0x7));
    // every mask below the default must fail the reference order test
    for (unsigned m = 2; m <= 10; ++m) {
        const uint64_t def = make_field(m)->primitive_poly().low_word();
        for (uint64_t c = (uint64_t(1) << m) + 1; c < def; c += 2)
            CHECK(ref_order_of_x(static_cast<uint32_t>(c), m) != (uint32_t(1) << m) - 1);
    }
}

TEST_CASE("multiplication matches the reference and the identities") {
    const FieldPtr f = make_field(4, Gf2Poly(0x13));
    // alpha * alpha^3 = alpha^4 = alpha + 1: masks 0010 * 1000 -> 0011
    CHECK(f->mul(0b0010, 0b1000) == 0b0011);
    for (uint32_t a = 0; a < 16; ++a) {
        CHECK(f->mul(a, 1) == a);
        CHECK(f->mul(a, 0) == 0);
        for (uint32_t b = 0; b < 16; ++b) {
            CHECK(f->mul(a, b) == ref_clmul_mod(a, b, 0x13, 4));
            CHECK(f->mul(a, b) == f->mul(b, a));
            for (uint32_t c = 0; c < 16; ++c)
                CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        }
    }
}

TEST_CASE("nonzero elements satisfy a^(2^m - 1) = 1") {
    for (unsigned m = 2; m <= 10; ++m) {
        const FieldPtr f = make_field(m);
        for (uint32_t a = 1; a <= f->order(); ++a) CHECK(f->pow(a, f->order()) == 1);
    }
}

TEST_CASE("cyclotomic cosets") {
    const FieldPtr f8bit = make_field(8);
    CHECK(cyclotomic_coset(*f8bit, 17) == std::vector<uint32_t>{17, 34, 68, 136});
    CHECK(cyclotomic_coset(*f8bit, 0) == std::vector<uint32_t>{0});
    const FieldPtr f16 = make_field(4);
    CHECK(cyclotomic_coset(*f16, 1) == std::vector<uint32_t>{1, 2, 4, 8});

    // cosets partition {0, ..., 2^m - 2}
    for (unsigned m = 2; m <= 10; ++m) {
        const FieldPtr f = make_field(m);
        std::set<uint32_t> seen;
        size_t total = 0;
        for (uint32_t e = 0; e < f->order(); ++e) {
            if (seen.count(e)) continue;
            const std::vector<uint32_t> coset = cyclotomic_coset(*f, e);
            CHECK(f->m() % coset.size() == 0);
            for (uint32_t c : coset) CHECK(seen.insert(c).second);
            total += coset.size();
        }
        CHECK(total == f->order());
    }
}

TEST_CASE("minimal polynomials") {
    const FieldPtr f = make_field(4, Gf2Poly(0x13));
    CHECK(minimal_polynomial(*f, 1) == Gf2Poly(0x13));  // defining polynomial
    CHECK(minimal_polynomial(*f, 0) == Gf2Poly(0b11));  // x + 1
    // alpha^5 lies in GF(4): minimal polynomial x^2+x+1
    CHECK(minimal_polynomial(*f, 5) == Gf2Poly(0b111));

    for (unsigned m = 2; m <= 8; ++m) {
        const FieldPtr fm = make_field(m);
        const Gf2Poly xn1 = Gf2Poly::xn_plus_1(fm->order());
        for (uint32_t e = 0; e < fm->order(); ++e) {
            const Gf2Poly mp = minimal_polynomial(*fm, e);
            CHECK(mp.degree() == static_cast<int>(cyclotomic_coset(*fm, e).size()));
            CHECK(Gf2Poly::divmod(xn1, mp).second.is_zero());
            CHECK(fm->eval(mp, fm->alpha_pow(e)) == 0);
        }
    }
}
