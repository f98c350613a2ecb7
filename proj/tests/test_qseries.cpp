#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modzero/qseries.hpp"

using namespace modzero;

namespace {

FracSeries mono(long num, long den_, Rat coeff, Rat order) {
    return FracSeries::monomial(std::move(coeff), num, static_cast<int>(den_), std::move(order));
}

FracSeries random_series(std::mt19937& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> expo(-3, 6);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> dens(1, 3);
    FracSeries s = FracSeries::zero(Rat(12));
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int c = coef(rng);
        if (c == 0) c = 1;
        s = s + mono(expo(rng), dens(rng), Rat(c), Rat(12));
    }
    return s;
}

}  // namespace

TEST_CASE("add: cancellation, grid merge, identity") {
    FracSeries a = mono(-1, 1, 1, Rat(10)) + mono(0, 1, 2, Rat(10));  // 1/q + 2
    FracSeries b = mono(-1, 1, -1, Rat(10));                          // -1/q
    FracSeries s = a + b;
    REQUIRE(s.coeff(Rat(0)) == 2);
    REQUIRE(s.coeff(Rat(-1)) == 0);
    REQUIRE(s.lead_exp() == 0);

    FracSeries g = mono(1, 2, 1, Rat(10)) + mono(1, 3, 1, Rat(10));   // q^1/2 + q^1/3
    REQUIRE(g.D == 6);
    REQUIRE(g.coeff(Rat(1, 2)) == 1);
    REQUIRE(g.coeff(Rat(1, 3)) == 1);

    FracSeries e4 = mono(0, 1, 1, Rat(10)) + mono(1, 1, 240, Rat(10));
    FracSeries same = e4 + FracSeries::zero(Rat(10));
    REQUIRE(equal_upto(e4, same, Rat(10)));
}

TEST_CASE("mul: shift by q and truncation bookkeeping") {
    FracSeries a = mono(-1, 1, 1, Rat(10)) + mono(0, 1, 2, Rat(10));
    FracSeries q = mono(1, 1, 1, Rat(10));
    FracSeries p = a * q;
    REQUIRE(p.coeff(Rat(0)) == 1);
    REQUIRE(p.coeff(Rat(1)) == 2);
    // multiplying by q^1 shifts the guarantee by the operand leads
    REQUIRE(p.order == std::min(Rat(10) + 1, Rat(10) + a.lead_exp()));
}

TEST_CASE("reciprocal: geometric series, pure monomial, zero error") {
    FracSeries one_minus_q = mono(0, 1, 1, Rat(12)) + mono(1, 1, -1, Rat(12));
    FracSeries inv = reciprocal(one_minus_q);
    for (int n = 0; n < 10; ++n) REQUIRE(inv.coeff(Rat(n)) == 1);

    FracSeries q = mono(1, 1, 1, Rat(12));
    FracSeries iq = reciprocal(q);
    REQUIRE(iq.lead_exp() == -1);
    REQUIRE(iq.coeff(Rat(-1)) == 1);

    REQUIRE_THROWS_AS(reciprocal(FracSeries::zero(Rat(4))), SeriesError);
}

TEST_CASE("int_pow: binomial square, zeroth power") {
    FracSeries a = mono(0, 1, 1, Rat(12)) + mono(1, 1, 1, Rat(12));  // 1 + q
    FracSeries sq = int_pow(a, 2);
    REQUIRE(sq.coeff(Rat(0)) == 1);
    REQUIRE(sq.coeff(Rat(1)) == 2);
    REQUIRE(sq.coeff(Rat(2)) == 1);
    FracSeries p0 = int_pow(a, 0);
    REQUIRE(p0.coeff(Rat(0)) == 1);
    REQUIRE(p0.c.size() == 1);
}

TEST_CASE("nth_root: perfect square, monomial, obstructions") {
    FracSeries a = mono(0, 1, 1, Rat(12)) + mono(1, 1, 2, Rat(12)) + mono(2, 1, 1, Rat(12));
    FracSeries r = nth_root(a, 2);
    REQUIRE(r.coeff(Rat(0)) == 1);
    REQUIRE(r.coeff(Rat(1)) == 1);
    REQUIRE(equal_upto(int_pow(r, 2), a, Rat(10)));

    FracSeries q2 = mono(2, 1, 1, Rat(12));
    FracSeries rq = nth_root(q2, 2);
    REQUIRE(rq.lead_exp() == 1);
    REQUIRE(rq.coeff(Rat(1)) == 1);

    FracSeries bad = mono(0, 1, 2, Rat(12));  // 2 is not a rational square
    REQUIRE_THROWS_AS(nth_root(bad, 2), SeriesError);
}

TEST_CASE("substitute_scale: exponent dilation, identity") {
    FracSeries a = mono(-1, 1, 1, Rat(8)) + mono(0, 1, 2, Rat(8)) + mono(1, 1, 1, Rat(8));
    FracSeries s = substitute_scale(a, 2);
    REQUIRE(s.coeff(Rat(-2)) == 1);
    REQUIRE(s.coeff(Rat(0)) == 2);
    REQUIRE(s.coeff(Rat(2)) == 1);
    REQUIRE(s.order == Rat(16));
    REQUIRE(equal_upto(substitute_scale(a, 1), a, Rat(8)));
}

TEST_CASE("shift_character: third roots of unity, zero shift, unsupported") {
    FracSeries q = mono(1, 1, 1, Rat(8));
    CycSeries s = shift_character(q, Rat(1, 3));
    REQUIRE(s.coeff(Rat(1)) == omega_pow(1));

    CycSeries id = shift_character(q, Rat(0));
    REQUIRE(id.coeff(Rat(1)) == Cyc(Rat(1)));

    REQUIRE_THROWS_AS(shift_character(q, Rat(1, 5)), SeriesError);
}

TEST_CASE("ring laws on random series (exact)") {
    std::mt19937 rng(20260810);
    for (int iter = 0; iter < 60; ++iter) {
        FracSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
        REQUIRE(equal_upto(a + b, b + a, Rat(6)));
        REQUIRE(equal_upto((a + b) + c, a + (b + c), Rat(6)));
        REQUIRE(equal_upto(a * b, b * a, Rat(4)));
        REQUIRE(equal_upto((a * b) * c, a * (b * c), Rat(3)));
        REQUIRE(equal_upto(a * (b + c), a * b + a * c, Rat(4)));
        // scale is a ring homomorphism
        REQUIRE(equal_upto(substitute_scale(a * b, 2),
                           substitute_scale(a, 2) * substitute_scale(b, 2), Rat(8)));
    }
}

TEST_CASE("round trips: reciprocal and nth_root on unit-like series") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 25; ++iter) {
        FracSeries u = mono(0, 1, 1, Rat(12)) + mono(1, 1, 0, Rat(12)) + random_series(rng, 3) *
                                                                              mono(2, 1, 1, Rat(12));
        if (u.coeff(Rat(0)) == 0) continue;
        FracSeries inv = reciprocal(u);
        FracSeries prod = u * inv;
        REQUIRE(prod.coeff(Rat(0)) == 1);
        REQUIRE(equal_upto(prod, FracSeries::constant(Rat(1), prod.order), prod.order));

        FracSeries sq = int_pow(u, 2);
        FracSeries back = nth_root(sq, 2);
        // sign convention: positive leading coefficient
        FracSeries ref = u.coeff(u.lead_exp()) > 0 ? u : -u;
        REQUIRE(equal_upto(back, ref, back.order));
    }
}

TEST_CASE("truncation soundness: recompute at double order agrees") {
    // (1 - q)^-1 * (1 + q)^3 at two orders
    auto build = [](long N) {
        FracSeries a = mono(0, 1, 1, Rat(N)) + mono(1, 1, -1, Rat(N));
        FracSeries b = mono(0, 1, 1, Rat(N)) + mono(1, 1, 1, Rat(N));
        return reciprocal(a) * int_pow(b, 3);
    };
    FracSeries n16 = build(16), n32 = build(32);
    REQUIRE(equal_upto(n16, n32, Rat(16)));
}
