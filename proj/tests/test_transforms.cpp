#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypx/runner.hpp"
#include "hypx/summations.hpp"
#include "hypx/transform.hpp"

using namespace hypx;

TEST_CASE("lifting series") {
    // (1,1;1): -4x/(1-x)^2 has coefficients -4n (oracle: -4x * sum (n+1) x^n)
    auto quad = lifting_series<Rational>(LiftingMap{1, 1, Rational(1)}, 6);
    CHECK(quad[0] == 0);
    for (unsigned i = 1; i <= 6; ++i) CHECK(quad[i] == Rational(-4) * Rational(i));

    auto cubic1 = lifting_series<Rational>(LiftingMap{1, 2, Rational(1, 4)}, 3);
    CHECK(cubic1[0] == 0);
    CHECK(cubic1[1] == -27);

    auto cubic2 = lifting_series<Rational>(LiftingMap{2, 1, Rational(4)}, 3);
    CHECK(cubic2[0] == 0);
    CHECK(cubic2[1] == 0);
    CHECK(cubic2[2] == Rational(27, 64));

    CHECK(lifting_prefactor(1, 1) == 4);
    CHECK(lifting_prefactor(1, 2) == Rational(27, 4));
    CHECK(lifting_prefactor(2, 1) == Rational(27, 4));
}

TEST_CASE("series composition") {
    const unsigned N = 10;
    // identity inner
    TruncatedSeries<Rational> x(N);
    x[1] = 1;
    auto geo = power_prefactor_series(Rational(-1), Rational(-1), N);  // 1/(1-t)
    CHECK(!first_mismatch(ts_compose(geo, x), geo));

    // 1/(1-t) at t = -4x/(1-x)^2 equals ((1-x)/(1+x))^2; the oracle expands
    // (1-x)^2 * sum (j+1)(-x)^j directly.
    auto inner = lifting_series<Rational>(LiftingMap{1, 1, Rational(1)}, N);
    auto composed = ts_compose(geo, inner);
    TruncatedSeries<Rational> oracle(N);
    for (unsigned j = 0; j <= N; ++j) {
        Rational base = (j % 2 == 0) ? Rational(j + 1) : Rational(-(static_cast<int>(j) + 1));
        oracle[j] += base;
        if (j + 1 <= N) oracle[j + 1] += Rational(j % 2 == 0 ? -2 : 2) * Rational(j + 1);
        if (j + 2 <= N) oracle[j + 2] += base;
    }
    CHECK(!first_mismatch(composed, oracle));

    // constant outer
    TruncatedSeries<Rational> c7(std::vector<Rational>{7, 0, 0, 0});
    CHECK(ts_compose(c7, x).c == std::vector<Rational>{7, 0, 0, 0});

    // nonzero inner constant rejected
    TruncatedSeries<Rational> bad(N);
    bad[0] = 1;
    CHECK_THROWS_AS(ts_compose(geo, bad), DomainError);
}

TEST_CASE("power prefactor series") {
    auto ones = power_prefactor_series(Rational(-1), Rational(-1), 5);
    for (unsigned i = 0; i <= 5; ++i) CHECK(ones[i] == 1);
    auto sq = power_prefactor_series(Rational(-1), Rational(1, 2), 3);
    CHECK(sq[0] == 1);
    CHECK(sq[1] == Rational(-1, 2));
    CHECK(sq[2] == Rational(-1, 8));
    CHECK(sq[3] == Rational(-1, 16));
    auto cube = power_prefactor_series(Rational(8), Rational(-3), 1);
    CHECK(cube[1] == -24);
}

TEST_CASE("registry identities verify") {
    std::map<std::string, Rational> p{{"a", Rational(1)}, {"b", Rational(1, 3)},
                                      {"c", Rational(1, 5)}};
    auto id = build_identity("thmA2", 0, p);
    auto rep = verify_transform(id, 12);
    CHECK(rep.pass);
    CHECK(rep.mode == "exact");

    Rng rng(31);
    auto rep2 = run_random_transform("thmA2", 2, 16, rng);
    CHECK(rep2.pass);

    // deeper truncation than the default, one instance per shape
    auto deep = build_identity("thmA3p", 1, {{"a", Rational(2, 3)}, {"b", Rational(1, 5)}});
    CHECK(verify_transform(deep, 24).pass);

    for (const std::string name : {"thmA3", "thmA3p", "thmB2", "thmB3", "thmB3p", "thmC2",
                                   "thmC3", "thmC3p", "lastmin2", "lastmin3", "rrplus"}) {
        auto r = run_random_transform(name, 1, 10, rng);
        CHECK_MESSAGE(r.pass, name);
    }
    CHECK(run_random_transform("niblett", 1, 12, rng).pass);
    CHECK(run_random_transform("linconstraint", 1, 12, rng).pass);

    CHECK_THROWS_AS(build_identity("nonesuch", 0, p), DomainError);
    CHECK_THROWS_AS(build_identity("curious", 1, p), DomainError);
    CHECK_THROWS_AS(build_identity("niblett", 2, p), DomainError);
}

TEST_CASE("excess of built identities") {
    std::map<std::string, Rational> p{{"a", Rational(2, 3)}, {"b", Rational(1, 5)},
                                      {"c", Rational(3, 7)}};
    for (unsigned k = 0; k <= 3; ++k) {
        auto a2 = build_identity("thmA2", k, p);
        CHECK(parametric_excess(a2.lhs) == Rational(1, 2) + Rational(k));
        auto c2 = build_identity("thmC2", k, p);
        CHECK(parametric_excess(c2.lhs) == Rational(-1, 2) - Rational(k));
    }
}

TEST_CASE("numeric identities") {
    set_precision_bits(256);
    Real tol = pow(Real(10), -40);
    auto id = build_identity_numeric("curious", {});
    auto rep = verify_transform(id, 12, tol);
    CHECK(rep.pass);
    CHECK(rep.mode == "numeric");

    auto lc2 = build_identity_numeric("linconstraint2",
                                      {{"b", Rational(1, 5)}, {"sign", Rational(1)}});
    CHECK(verify_transform(lc2, 12, tol).pass);
    auto lc2m = build_identity_numeric("linconstraint2",
                                       {{"b", Rational(2, 7)}, {"sign", Rational(-1)}});
    CHECK(verify_transform(lc2m, 12, tol).pass);

    // the merged displayed form agrees with the unmerged weighted series
    auto merged = curious_merged_form(Rational(1, 6));
    auto s1 = series_coefficients(merged, 10);
    auto s2 = series_coefficients(id.rhs, 10);
    CHECK(!first_mismatch(s1, s2, tol));
}

TEST_CASE("poisedness of built right-hand sides") {
    set_precision_bits(256);
    Real tol = pow(Real(10), -40);
    std::map<std::string, Rational> p{{"a", Rational(2, 3)}, {"b", Rational(1, 5)},
                                      {"c", Rational(3, 7)}};

    // the quadratic rhs in explicit-pair form is well poised for k >= 1
    auto a2 = build_identity("thmA2", 2, p);
    auto pairs = explicit_pair_form(a2.rhs, 256);
    auto rep = classify_poisedness(pairs, tol);
    CHECK(rep.well_poised);

    // the companion quadratic rhs is very well poised
    auto c2 = build_identity("thmC2", 1, p);
    auto crep = classify_poisedness(explicit_pair_form(c2.rhs, 256), tol);
    CHECK(crep.very_well_poised);

    // the cubic rhs at k = 0 is (1,2)-poised but not for k >= 1
    auto a3_0 = build_identity("thmA3", 0, p);
    CHECK(classify_poisedness(a3_0.rhs).mn_poised == std::make_pair(1, 2));
    auto a3_1 = build_identity("thmA3", 1, p);
    auto r31 = classify_poisedness(explicit_pair_form(a3_1.rhs, 256), tol);
    CHECK(!r31.well_poised);
    CHECK(!(r31.mn_poised == std::make_pair(1, 2)));

    // the second-cubic rhs at k = 0 is (2,1)-poised
    auto a3p_0 = build_identity("thmA3p", 0, p);
    CHECK(classify_poisedness(a3p_0.rhs).mn_poised == std::make_pair(2, 1));
}

TEST_CASE("novelty relation") {
    std::map<std::string, Rational> p{{"a", Rational(2, 3)}, {"b", Rational(1, 5)},
                                      {"c", Rational(3, 7)}};
    for (unsigned k : {1u, 2u}) {
        CHECK(verify_novelty(QTag::Q2, k, p, 12).pass);
        CHECK(verify_novelty(QTag::Q3, k, p, 12).pass);
        CHECK(verify_novelty(QTag::Q3p, k, p, 12).pass);
    }
    CHECK_THROWS_AS(verify_novelty(QTag::Q2, 0, p, 12), DomainError);
}

TEST_CASE("key lemma") {
    Rational a(2, 3), b(1, 5), c(3, 7);
    unsigned k = 1;
    // quadratic arrays
    CHECK(verify_key_lemma(1, 1, Rational(1), a, {1 - Rational(k) + a - b - c},
                           {1 + a - b, 1 + a - c}, 8)
              .pass);
    // first cubic arrays (empty alpha)
    std::vector<Rational> beta{Rational(3, 4) + Rational(k) / 2 + a / 2 + b / 2,
                               Rational(3, 4) + Rational(k) / 2 + a / 2 - b / 2};
    CHECK(verify_key_lemma(1, 2, Rational(1, 4), a, {}, beta, 8).pass);
    CHECK(verify_key_lemma(2, 1, Rational(4), a, {}, beta, 8).pass);
    // generic lifting well outside the registry
    CHECK(verify_key_lemma(1, 3, Rational(2, 3), a, {Rational(1, 7)},
                           {Rational(8, 5), Rational(9, 7), b, c}, 6)
              .pass);
    // a = 0 degenerates to the constant series
    CHECK(verify_key_lemma(1, 1, Rational(1), Rational(0), {b}, {c, Rational(9, 7)}, 6).pass);
    // length contract
    CHECK_THROWS_AS(verify_key_lemma(1, 1, Rational(1), a, {}, {}, 4), DomainError);
}

TEST_CASE("mutation sites break verification early") {
    std::map<std::string, Rational> p{{"a", Rational(2, 3)}, {"b", Rational(1, 5)},
                                      {"c", Rational(3, 7)}};
    for (const std::string site :
         {"lhs-upper-0", "rhs-upper-1", "rhs-lower-0", "prefactor-0", "weight-1"}) {
        auto id = build_identity("thmA2", 1, p);
        mutate_identity(id, site);
        auto rep = verify_transform(id, 12);
        CHECK_MESSAGE(!rep.pass, site);
        REQUIRE(rep.first_mismatch);
        CHECK(rep.first_mismatch->index <= 3);
    }
    auto id = build_identity("thmA2", 1, p);
    CHECK_THROWS_AS(mutate_identity(id, "nonsense"), DomainError);
}
