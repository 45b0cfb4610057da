#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincount/counts.hpp"

using namespace lincount;

TEST_CASE("classification") {
    CountProblem p = classify(6, 1, 7);
    CHECK(p.n == 9);
    CHECK(p.regime == Regime::LargeD);

    CHECK_THROWS_AS(classify(6, 2, 15), Error);  // 35 is odd

    CountProblem empty = classify(4, 1, 2);
    CHECK(empty.rho == -2);
    CHECK(empty.regime == Regime::Empty);

    CHECK(classify(2, 1, 2).regime == Regime::MinimalN);
    CHECK(classify(5, 1, 5).regime == Regime::RankOne);
    CHECK(classify(4, 2, 8).regime == Regime::Unproven);
    CHECK_THROWS_AS(classify(-1, 1, 2), Error);
    CHECK_THROWS_AS(classify(1, 0, 2), Error);
    CHECK_THROWS_AS(classify(1, 1, 0), Error);
}

TEST_CASE("large d closed form") {
    CHECK(tevelev_large_d(classify(6, 1, 7)) == 64);
    CHECK(tevelev_large_d(classify(1, 2, 4)) == 3);
    CHECK(tevelev_large_d(0, 3, 4) == 1);  // raw overload; (0,3,4) is not balanced
    CHECK_THROWS_AS(tevelev_large_d(classify(3, 1, 3)), Error);
}

TEST_CASE("integral route") {
    auto check_value = [](int g, int r, int d, const Int& expected, bool proven) {
        IntegralResult res = tevelev_integral(classify(g, r, d));
        CHECK(res.value == expected);
        CHECK(res.proven == proven);
    };
    check_value(2, 1, 2, 1, true);   // the unique genus-2 pencil of degree 2
    check_value(6, 1, 7, 64, true);
    check_value(3, 1, 3, 4, true);   // boundary: 2^3 - (3+1)
    check_value(4, 1, 2, 0, true);   // rho < 0
    check_value(4, 2, 8, 81, false); // intermediate d, r > 1: formula value only
}

TEST_CASE("boundary values") {
    CHECK(boundary_value(3, 1) == 4);
    CHECK(boundary_value(2, 1) == 1);
    CHECK(boundary_value(1, 1) == 0);
    CHECK_THROWS_AS(boundary_value(0, 1), Error);

    for (int g = 1; g <= 14; ++g)
        CHECK(tevelev_integral(classify(g, 1, g)).value == boundary_value(g, 1));
}

TEST_CASE("r=1 closed forms") {
    auto forms = r1_closed_forms(6, 7);
    CHECK(forms.sum_form == 64);
    CHECK(forms.binomial_form == 64);
    CHECK(forms.cps_form == 64);

    CHECK(r1_closed_forms(2, 2).binomial_form == 1);
    CHECK(r1_closed_forms(3, 3).cps_form == 4);
    CHECK_THROWS_AS(r1_closed_forms(5, 3), Error);  // 2d-2-g < 0

    for (int g = 1; g <= 10; ++g) {
        for (int d = (g + 3) / 2; d <= g + 4; ++d) {
            auto f = r1_closed_forms(g, d);
            Int integral = tevelev_integral(classify(g, 1, d)).value;
            CHECK(f.sum_form == integral);
            CHECK(f.binomial_form == integral);
            CHECK(f.cps_form == integral);
        }
    }
}

TEST_CASE("two-row pairing") {
    CHECK(gr2_pairing(3, 3, 0, 4) == 1);  // point class at g = 0
    CHECK(gr2_pairing(0, 0, 2, 2) == 1);
    // the closed form and the Pieri route agree (the value is 1, not 2)
    CHECK(gr2_pairing(2, 0, 2, 3) == 1);
    CHECK_THROWS_AS(gr2_pairing(2, 1, 2, 3), Error);  // degree mismatch
    CHECK_THROWS_AS(gr2_pairing(1, 2, 1, 3), Error);  // a < b
}

TEST_CASE("pullback degrees") {
    CHECK(pullback_degree(Partition{1}, 1, 3) == 2);
    CHECK(pullback_degree(Partition{}, 1, 3) == 1);
    CHECK(pullback_degree(Partition{}, 2, 5) == 1);
    CHECK(pullback_degree(Partition{}, 3, 3) == 1);  // Gr(4,4) is a point
    for (int r = 1; r <= 4; ++r)
        for (int d = 2 * r; d <= 9; ++d)
            CHECK(pullback_degree(Partition(std::vector<int>(r, 1)), r, d) == r + 1);
    CHECK_THROWS_AS(pullback_degree(Partition{3}, 1, 3), Error);         // |lambda| > d-r
    CHECK_THROWS_AS(pullback_degree(Partition{1, 1, 1}, 1, 5), Error);   // too many rows
}

TEST_CASE("degeneration sum") {
    CHECK(degeneration_sum(classify(2, 1, 4)) == 4);
    CHECK(degeneration_sum(classify(1, 2, 4)) == 3);
    CHECK(degeneration_sum(classify(0, 2, 4)) == 1);
    CHECK_THROWS_AS(degeneration_sum(classify(3, 1, 3)), Error);  // not LargeD
}

TEST_CASE("castelnuovo numbers") {
    CHECK(castelnuovo(1, 2) == 2);
    CHECK(castelnuovo(2, 1) == 1);
    CHECK(castelnuovo(1, 3) == 5);
    CHECK_THROWS_AS(castelnuovo(0, 1), Error);
    for (int r = 1; r <= 3; ++r) {
        for (int s = 1; s <= 3; ++s) {
            int g = r * s + s;
            CHECK(castelnuovo(r, s) == integrate(sigma1r_power_table(g, BoxShape(r + 1, r * s))));
        }
    }
}

TEST_CASE("ramified problems") {
    RamifiedProblem none = make_ramified(2, 1, 5, {});
    CHECK(ramified_large_d(none) == 4);
    CHECK(ramified_integral(none).value == 4);

    RamifiedProblem one = make_ramified(1, 1, 4, {Partition{1}});
    CHECK(one.n == 7);
    CHECK(ramified_large_d(one) == 4);
    CHECK(ramified_integral(one).value == 4);

    RamifiedProblem two = make_ramified(0, 1, 3, {Partition{1}, Partition{1}});
    CHECK(ramified_large_d(two) == 4);
    CHECK(ramified_integral(two).value == 4);

    // below the product-formula threshold the integral still evaluates
    RamifiedProblem low = make_ramified(2, 1, 3, {Partition{1}});
    CHECK_THROWS_AS(ramified_large_d(low), Error);
    IntegralResult res = ramified_integral(low);
    CHECK(res.proven);  // r = 1
    CHECK(res.value == 4);

    CHECK_THROWS_AS(make_ramified(1, 1, 4, {Partition{1, 1}}), Error);  // more than r parts
    CHECK_THROWS_AS(make_ramified(1, 2, 4, {Partition{1}}), Error);     // unbalanced
}

TEST_CASE("ramified m=0 matches the plain integral") {
    for (int g = 0; g <= 4; ++g) {
        for (int r = 1; r <= 2; ++r) {
            for (int d = 1; d <= r * g + r + 3; ++d) {
                long long num = static_cast<long long>(d) * r + d + r - static_cast<long long>(r) * g;
                if (num % r != 0) continue;
                CHECK(ramified_integral(make_ramified(g, r, d, {})).value ==
                      tevelev_integral(classify(g, r, d)).value);
            }
        }
    }
}
