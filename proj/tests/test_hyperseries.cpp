#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypx/qpoly.hpp"
#include "hypx/runner.hpp"
#include "hypx/series.hpp"

using namespace hypx;

namespace {
WeightedSeries<Rational> hyp(std::vector<Rational> up, std::vector<Rational> lo) {
    return WeightedSeries<Rational>{std::move(up), std::move(lo)};
}
}  // namespace

TEST_CASE("delta arrays") {
    Rational a(2, 3);
    CHECK(delta_array(1u, a) == std::vector<Rational>{a});
    CHECK(delta_array(2u, a) == std::vector<Rational>{a / 2, Rational(1, 2) + a / 2});
    CHECK(delta_array(3u, a) ==
          std::vector<Rational>{a / 3, Rational(1, 3) + a / 3, Rational(2, 3) + a / 3});
}

TEST_CASE("parametric excess") {
    Rational a(1), b(1, 3), c(1, 5), k(2);
    auto lhs = hyp({a / 2, Rational(1, 2) + a / 2, 1 - k + a - b - c}, {1 + a - b, 1 + a - c});
    CHECK(parametric_excess(lhs) == Rational(1, 2) + k);
    auto clhs = hyp({Rational(1, 2) + k + a / 2, 1 + k + a / 2, 1 - k + a - b - c},
                    {1 + a - b, 1 + a - c});
    CHECK(parametric_excess(clhs) == -Rational(1, 2) - k);
    CHECK(parametric_excess(hyp({}, {})) == 0);

    // appending a pair (u, v) changes the excess by v - u
    auto s2 = lhs;
    s2.upper.push_back(Rational(7, 3));
    s2.lower.push_back(Rational(4, 3));
    CHECK(parametric_excess(s2) - parametric_excess(lhs) == Rational(4, 3) - Rational(7, 3));
}

TEST_CASE("series coefficients") {
    auto geo = series_coefficients(hyp({Rational(1)}, {}), 4);
    for (unsigned i = 0; i <= 4; ++i) CHECK(geo[i] == 1);

    auto log_series = series_coefficients(hyp({Rational(1), Rational(1)}, {Rational(2)}), 3);
    CHECK(log_series[0] == 1);
    CHECK(log_series[1] == Rational(1, 2));
    CHECK(log_series[2] == Rational(1, 3));
    CHECK(log_series[3] == Rational(1, 4));

    // weight 1 + n: c_1 = (2)_1 * 2 / 1! = 4
    auto weighted = series_coefficients(
        make_weighted<Rational>({Rational(2)}, {}, RatPoly(std::vector<Rational>{1, 1})), 2);
    CHECK(weighted[1] == 4);

    // termination: coefficients beyond an upper -M vanish
    auto term = series_coefficients(hyp({Rational(-2), Rational(5)}, {Rational(3)}), 5);
    CHECK(term[2] != 0);
    CHECK(term[3] == 0);
    CHECK(term[4] == 0);

    // lower pole before termination is named
    CHECK_THROWS_WITH_AS(series_coefficients(hyp({Rational(5)}, {Rational(-2)}), 5).order(),
                         doctest::Contains("-2"), DomainError);
    // but a pole past termination is fine (M <= L)
    CHECK_NOTHROW(series_coefficients(hyp({Rational(-2), Rational(1)}, {Rational(-4)}), 8));
    CHECK_NOTHROW(series_coefficients(hyp({Rational(-2), Rational(1)}, {Rational(-2)}), 8));
}

TEST_CASE("terminating sums") {
    // 2F1[-1, b; c](1) = 1 - b/c
    Rational b(3, 7), c(5, 2);
    CHECK(terminating_sum(hyp({Rational(-1), b}, {c})) == 1 - b / c);
    // two-term sum equal to the k=1 quadratic weight at n = 1
    CHECK(terminating_sum(hyp({Rational(-1), Rational(6), Rational(-1)},
                              {Rational(2), Rational(3)})) == 2);
    CHECK(terminating_sum(hyp({Rational(0), Rational(4), Rational(9)},
                              {Rational(11), Rational(13)})) == 1);
    CHECK_THROWS_AS(terminating_sum(hyp({Rational(1, 2)}, {})), DomainError);
}

TEST_CASE("contiguity operator") {
    // on 1F0[a]: coefficient map gives 1F0[a+1]
    Rational a(2, 5);
    auto base = series_coefficients(hyp({a}, {}), 6);
    auto shifted = apply_contiguity(base, a);
    auto expect = series_coefficients(hyp({a + 1}, {}), 6);
    CHECK(!first_mismatch(shifted, expect));

    // equals multiplying the weight by (1 + n/e)
    Rational e(3, 4);
    auto ws = make_weighted<Rational>({Rational(1, 3), Rational(7, 5)}, {Rational(9, 4)},
                                      RatPoly(std::vector<Rational>{1, 2}));
    auto via_op = apply_contiguity(series_coefficients(ws, 8), e);
    auto ws2 = ws;
    ws2.weight = ws.weight * RatPoly(std::vector<Rational>{1, 1 / e});
    CHECK(!first_mismatch(via_op, series_coefficients(ws2, 8)));

    auto constant = TruncatedSeries<Rational>(std::vector<Rational>{1, 0, 0});
    CHECK(!first_mismatch(apply_contiguity(constant, Rational(5)), constant));
    CHECK_THROWS_AS(apply_contiguity(constant, Rational(0)), DomainError);
}

TEST_CASE("explicit pair form") {
    set_precision_bits(256);
    // Q(n) = (n+2)(n+3)/6: appended pairs upper {3, 4}, lower {2, 3}
    auto ws = make_weighted<Rational>({Rational(1, 2)}, {Rational(7, 3)},
                                      RatPoly(std::vector<Rational>{1, Rational(5, 6),
                                                                    Rational(1, 6)}));
    auto pairs = explicit_pair_form(ws, 256);
    REQUIRE(pairs.upper.size() == 3);
    Real tol = 1e-50;
    CHECK(multiset_equal(std::vector<Complex>{pairs.upper[1], pairs.upper[2]},
                         {Complex(3), Complex(4)}, tol));
    CHECK(multiset_equal(std::vector<Complex>{pairs.lower[1], pairs.lower[2]},
                         {Complex(2), Complex(3)}, tol));

    // coefficients agree with the weighted form
    auto s1 = series_coefficients(convert_series(ws), 12);
    auto s2 = series_coefficients(pairs, 12);
    CHECK(!first_mismatch(s1, s2, tol));

    // negated roots {-b, -c} when a = -b-c: here (n-2)(n-3)/6 has pairs at -2, -3
    auto neg = make_weighted<Rational>({Rational(1, 2)}, {Rational(22, 3)},
                                       RatPoly(std::vector<Rational>{1, -Rational(5, 6),
                                                                     Rational(1, 6)}));
    CHECK_THROWS_AS(explicit_pair_form(neg, 256), DomainError);  // xi = -2 is a pole

    // constant weight: unchanged
    auto plain = explicit_pair_form(hyp({Rational(1)}, {}), 256);
    CHECK(plain.upper.size() == 1);

    // Q(0) != 1 rejected
    WeightedSeries<Rational> bad{{Rational(1)}, {}, RatPoly(std::vector<Rational>{2, 1}),
                                 Rational(1), true};
    CHECK_THROWS_AS(explicit_pair_form(bad, 256), DomainError);
}

TEST_CASE("weighted versus exact pair form") {
    // random rational negated roots: appending the pairs exactly reproduces
    // the weighted coefficients at every order
    Rng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> xis;
        int deg = rng.uniform(1, 3);
        RatPoly w = RatPoly::one();
        bool ok = true;
        for (int i = 0; i < deg; ++i) {
            Rational xi = rng.rational9();
            if (xi == 0 || is_nonpositive_integer(xi)) {
                ok = false;
                break;
            }
            xis.push_back(xi);
            w = w * RatPoly(std::vector<Rational>{xi, 1}) / xi;  // (n + xi)/xi
        }
        if (!ok) continue;
        auto weighted = make_weighted<Rational>({Rational(5, 7)}, {Rational(9, 5)}, w);
        auto paired = hyp({Rational(5, 7)}, {Rational(9, 5)});
        for (const auto& xi : xis) {
            paired.upper.push_back(1 + xi);
            paired.lower.push_back(xi);
        }
        CHECK(!first_mismatch(series_coefficients(weighted, 16),
                              series_coefficients(paired, 16)));
    }
}

TEST_CASE("merge unit pairs") {
    Rational xi(5, 4);
    auto s = hyp({Rational(1, 3), 1 + xi, 2 + xi}, {Rational(8, 3), xi, 1 + xi});
    auto r = merge_unit_pairs(s);
    CHECK(r.merged);
    REQUIRE(r.series.upper.size() == 2);
    CHECK(multiset_equal(r.series.upper, {Rational(1, 3), 2 + xi}));
    CHECK(multiset_equal(r.series.lower, {Rational(8, 3), xi}));
    // merging never changes the coefficients
    CHECK(!first_mismatch(series_coefficients(s, 16), series_coefficients(r.series, 16)));

    auto none = merge_unit_pairs(hyp({Rational(1)}, {}));
    CHECK(!none.merged);
}

TEST_CASE("poisedness classification") {
    // 3F2[1, 2; 3]-style: not well poised
    auto plain = hyp({Rational(1), Rational(2)}, {Rational(3)});
    auto rep = classify_poisedness(plain);
    CHECK(!rep.well_poised);

    // well-poised: pairs sum to 1 + a
    Rational a(2, 3), b(1, 5), c(3, 7);
    auto wp = hyp({a, b, c}, {1 + a - b, 1 + a - c});
    rep = classify_poisedness(wp);
    CHECK(rep.well_poised);
    CHECK(!rep.very_well_poised);

    // very well poised: add the (1 + a/2, a/2) pair
    auto vwp = hyp({a, 1 + a / 2, b, c}, {a / 2, 1 + a - b, 1 + a - c});
    rep = classify_poisedness(vwp);
    CHECK(rep.very_well_poised);

    // nearly poised: one sum off
    auto np = hyp({a, b, c}, {1 + a - b, 2 + a - c});
    rep = classify_poisedness(np);
    CHECK(!rep.well_poised);
    CHECK(rep.nearly_poised);

    // (1, 2)-poised cubic right-hand array at k = 0
    Rational aa(1, 3), bb(2, 7);
    auto mn = hyp({aa, Rational(1, 2) - bb, Rational(1, 2) + bb},
                  {Rational(3, 4) + aa / 2 + bb / 2, Rational(3, 4) + aa / 2 - bb / 2});
    rep = classify_poisedness(mn);
    CHECK(rep.mn_poised == std::make_pair(1, 2));
}

TEST_CASE("numeric evaluation") {
    set_precision_bits(256);
    Real tol = 1e-30;
    // geometric series at 1/2
    auto geo = convert_series(hyp({Rational(1)}, {}));
    auto v = eval_numeric(geo, Complex(Real(1) / 2), 1000, tol);
    CHECK(abs(v - Complex(2)) < tol * 10);

    // alternating logarithmic series at -1 (accelerated tail)
    auto log2 = convert_series(hyp({Rational(1), Rational(1)}, {Rational(2)}));
    auto lv = eval_numeric(log2, Complex(-1), 4000, tol);
    CHECK(abs(lv - Complex(log(Real(2)))) < tol * 100);

    // divergent geometric: convergence error carries a partial sum
    CHECK_THROWS_AS(eval_numeric(geo, Complex(2), 64, tol), ConvergenceError);
}
