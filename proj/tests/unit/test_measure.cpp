#include "bmeas/measure.hpp"

#include "bmeas/polynomial.hpp"
#include "doctest.h"

#include <cmath>

using namespace bmeas;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("lebesgue moments at p = 1/2") {
    auto j = moments_recurrence(r(1, 2), 20);
    for (int k = 0; k <= 20; ++k) CHECK(j[static_cast<std::size_t>(k)] == r(1, k + 1));
}

TEST_CASE("pinned moment values") {
    auto j3 = moments_recurrence(r(1, 3), 5);
    CHECK(j3[0] == 1);
    CHECK(j3[1] == r(2, 3));
    CHECK(j3[2] == r(14, 27));
    CHECK(j3[3] == r(82, 189));
    CHECK(j3[4] == r(3218, 8505));
    CHECK(j3[5] == r(7654, 22599));

    auto j7 = moments_recurrence(r(1, 7), 3);
    CHECK(j7[1] == r(6, 7));
    CHECK(j7[2] == r(38, 49));
    CHECK(j7[3] == r(1734, 2401));

    auto j9 = moments_recurrence(r(9, 10), 3);
    CHECK(j9[1] == r(1, 10));
    CHECK(j9[2] == r(1, 25));
    CHECK(j9[3] == r(71, 3500));
}

TEST_CASE("degenerate parameters") {
    auto at1 = moments_recurrence(r(1), 6);
    for (int k = 1; k <= 6; ++k) CHECK(at1[static_cast<std::size_t>(k)] == 0);  // point mass at 0
    auto at0 = moments_recurrence(r(0), 6);
    for (int k = 0; k <= 6; ++k) CHECK(at0[static_cast<std::size_t>(k)] == 1);  // point mass at 1
}

TEST_CASE("moment table extends in place") {
    MomentTable<Rational> table(r(1, 3));
    CHECK(table.max_order() == 0);
    CHECK(table[5] == r(7654, 22599));
    CHECK(table.max_order() == 5);
    CHECK(table[2] == r(14, 27));
    CHECK(table[12] == moments_recurrence(r(1, 3), 12)[12]);
}

TEST_CASE("self-similarity of polynomial integrals") {
    // int R dmu = p int R(x/2) dmu + (1-p) int R((x+1)/2) dmu, exactly.
    using RPoly = Polynomial<Rational>;
    const RPoly polys[] = {
        RPoly(std::vector<Rational>{r(0), r(-1), r(3)}),         // 3x^2 - x
        RPoly(std::vector<Rational>{r(1, 2), r(0), r(0), r(7)}),  // 7x^3 + 1/2
        RPoly::monomial(6),
    };
    const Rational ps[] = {r(1, 3), r(2, 3), r(9, 10), r(1, 2)};
    for (const auto& p : ps) {
        for (const auto& poly : polys) {
            Rational whole = integrate_poly_via_moments(poly, p);
            Rational low = integrate_poly_via_moments(poly_compose_affine(poly, r(1, 2), r(0)), p);
            Rational high = integrate_poly_via_moments(poly_compose_affine(poly, r(1, 2), r(1, 2)), p);
            CHECK(whole == p * low + (1 - p) * high);
        }
    }
    // Spot value: int (3x^2 - x) dmu_{1/3} = 8/9.
    CHECK(integrate_poly_via_moments(RPoly(std::vector<Rational>{r(0), r(-1), r(3)}), r(1, 3)) == r(8, 9));
}

TEST_CASE("floating facade matches exact values") {
    auto jd = moments_double(0.3, 12);
    auto jx = moments_recurrence(r(3, 10), 12);
    for (int k = 0; k <= 12; ++k) {
        double exact = scalar_from_rational<double>(jx[static_cast<std::size_t>(k)]);
        CHECK(std::abs(jd[static_cast<std::size_t>(k)] - exact) <= 1e-16);
    }
}

TEST_CASE("order validation") {
    CHECK_THROWS_AS(moments_recurrence(r(1, 2), -1), std::invalid_argument);
    MomentTable<Rational> table(r(1, 2));
    CHECK_THROWS_AS(table.ensure(-2), std::invalid_argument);
}
