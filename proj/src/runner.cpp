#include "hypx/runner.hpp"

#include <functional>
#include <iostream>

#include "hypx/roots.hpp"
#include "hypx/summations.hpp"
#include "hypx/transform.hpp"

namespace hypx {

namespace {

// Retries a sampler until it produces a nonsingular instance.
template <typename F>
VerificationReport with_resample(F&& attempt) {
    for (int tries = 0; tries < 2000; ++tries) {
        try {
            return attempt();
        } catch (const DomainError&) {
            continue;
        }
    }
    throw InternalError("parameter sampling failed to find a nonsingular instance");
}

bool npint(const Rational& v) { return is_nonpositive_integer(v); }

// The identities hold for generic parameters; a lower parameter at a
// nonpositive integer is a degenerate instance (conventional termination
// and the analytic limit part ways there), so sampled tuples avoid them.
void require_generic(std::initializer_list<Rational> values) {
    for (const auto& v : values)
        if (npint(v)) throw DomainError("degenerate lower parameter in sampled instance");
}

void require_generic(const TransformIdentity<Rational>& id) {
    for (const auto& v : id.lhs.lower)
        if (npint(v)) throw DomainError("degenerate lower parameter in sampled instance");
    for (const auto& v : id.rhs.lower)
        if (npint(v)) throw DomainError("degenerate lower parameter in sampled instance");
}

std::map<std::string, Rational> sample_transform_params(const std::string& name, unsigned k,
                                                        Rng& rng) {
    std::map<std::string, Rational> p;
    p["a"] = rng.rational9();
    p["b"] = rng.rational9();
    if (name == "thmA2" || name == "thmB2" || name == "thmC2" || name == "niblett" ||
        name == "linconstraint")
        p["c"] = rng.rational9();
    if (name == "thmB2" || name == "thmB3" || name == "thmB3p" || name == "rrplus")
        p["d"] = rng.rational9();
    if (name == "lastmin3") p.erase("b");
    if (name == "linconstraint") p.erase("a");
    (void)k;
    return p;
}

VerificationReport tag_seed(VerificationReport rep, std::uint64_t seed) {
    rep.seed = seed;
    return rep;
}

}  // namespace

VerificationReport run_random_transform(const std::string& name, unsigned k, unsigned order,
                                        Rng& rng) {
    return with_resample([&] {
        auto params = sample_transform_params(name, k, rng);
        auto id = build_identity(name, k, params);
        require_generic(id);
        return verify_transform(id, order);
    });
}

std::vector<VerificationReport> run_transform_suite(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    const std::vector<std::string> names = {"thmA2",  "thmA3",  "thmA3p", "thmB2", "thmB3",
                                            "thmB3p", "thmC2",  "thmC3",  "thmC3p"};
    Rng rng(opt.seed);
    for (const auto& name : names)
        for (unsigned k = 0; k <= opt.k_max; ++k)
            for (unsigned i = 0; i < opt.cases; ++i)
                out.push_back(tag_seed(run_random_transform(name, k, opt.order, rng), opt.seed));
    return out;
}

std::vector<VerificationReport> run_summation_suite(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    Rng rng(opt.seed + 1);
    const unsigned cases = opt.cases;
    const unsigned size_max = 6;

    for (unsigned i = 0; i < cases; ++i) {
        auto n = static_cast<unsigned>(rng.uniform(0, static_cast<int>(size_max)));
        out.push_back(with_resample([&] {
            Rational A = rng.rational9(), B = rng.rational9(), D = rng.rational9(),
                     E = rng.rational9();
            require_generic({D, E, 1 + A - D - Rational(n), 1 + A - E - Rational(n)});
            return verify_sheppard(n, A, B, D, E);
        }));
    }
    for (unsigned i = 0; i < cases; ++i) {
        auto n = static_cast<unsigned>(rng.uniform(0, static_cast<int>(size_max)));
        out.push_back(with_resample([&] {
            Rational A = rng.rational9(), B = rng.rational9(), C = rng.rational9(),
                     D = rng.rational9(), E = rng.rational9();
            Rational F = 1 - Rational(n) + A + B + C - D - E;
            require_generic({D, E, F, 1 + A - D - Rational(n), 1 + A - E - Rational(n)});
            return verify_whipple43(n, A, B, C, D, E, F);
        }));
    }
    for (unsigned i = 0; i < cases; ++i) {
        auto n = static_cast<unsigned>(rng.uniform(0, static_cast<int>(size_max)));
        unsigned k = i % (opt.k_max + 1);  // every level appears
        RForm fam = (i % 2 == 0) ? RForm::R2 : RForm::R3;
        out.push_back(with_resample([&] {
            Rational a = rng.rational9(), b = rng.rational9(), c = rng.rational9();
            const Rational kk = k, nn = n, half(1, 2), quarter(1, 4);
            if (fam == RForm::R2)
                require_generic({1 + a - b, 1 + a - c, b, c});
            else
                require_generic({Rational(3, 4) + kk / 2 + a / 2 + b / 2,
                                 Rational(3, 4) + kk / 2 + a / 2 - b / 2,
                                 quarter - kk / 2 + b / 2 - nn / 2,
                                 quarter - kk / 2 - b / 2 - nn / 2});
            return verify_r_forms(fam, n, k, a, b, c);
        }));
    }
    for (const std::string variant : {"i", "ii"}) {
        for (unsigned i = 0; i < cases; ++i) {
            unsigned k = i % (opt.k_max + 1);  // every level appears
            auto N = static_cast<unsigned>(rng.uniform(0, static_cast<int>(size_max)));
            out.push_back(with_resample([&] {
                Rational a = rng.rational9(), b = rng.rational9(), c = rng.rational9(),
                         d = rng.rational9(), e = rng.rational9();
                std::optional<Rational> f;
                if (variant == "ii") f = rng.rational9();
                const Rational kk = k, NN = N;
                require_generic({a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e,
                                 1 + a + NN, kk - a + d + e - NN, d - a - NN, e - a - NN});
                if (f) require_generic({1 - kk + a - *f, *f - a - NN});
                return verify_ext_whipple(variant, k, N, a, b, c, d, e, f);
            }));
        }
    }
    for (const std::string variant : {"i", "ii"}) {
        for (unsigned i = 0; i < cases; ++i) {
            unsigned k = i % (opt.k_max + 1);  // every level appears
            auto m = static_cast<unsigned>(rng.uniform(0, static_cast<int>(size_max)));
            out.push_back(with_resample([&] {
                Rational a = rng.rational9(), b = rng.rational9(), c = rng.rational9(),
                         w = rng.rational9();
                std::optional<Rational> d;
                if (variant == "ii") d = rng.rational9();
                const Rational mm = m, half(1, 2);
                require_generic({1 + a - b, 1 + a - c, half + (a - w - mm) / 2,
                                 1 + (a - w - mm) / 2, w, b, c});
                if (d) require_generic({*d});
                return verify_bailey1(variant, k, m, a, b, c, w, d);
            }));
        }
    }
    for (unsigned i = 0; i < cases; ++i) {
        unsigned k = i % (opt.k_max + 1);  // every level appears
        auto m = static_cast<unsigned>(rng.uniform(0, static_cast<int>(size_max)));
        out.push_back(with_resample([&] {
            Rational a = rng.rational9(), b = rng.rational9(), c = rng.rational9(),
                     w = rng.rational9();
            const Rational kk = k, mm = m;
            require_generic({1 + a - b, 1 + a - c, 1 + (a - w + 2 * kk - mm) / 2,
                             Rational(3, 2) + (a - w + 2 * kk - mm) / 2, w, b, c});
            return verify_bailey2(k, m, a, b, c, w);
        }));
    }
    for (auto& r : out) r.seed = opt.seed + 1;
    return out;
}

std::vector<VerificationReport> run_mechanism_suite(const SuiteOptions& opt) {
    // The two structural identities behind every registry transform: the
    // series-level raising relation and the double-summation lemma.
    std::vector<VerificationReport> out;
    Rng rng(opt.seed + 6);
    for (QTag tag : {QTag::Q2, QTag::Q3, QTag::Q3p}) {
        for (unsigned k = 1; k <= std::max(1u, opt.k_max); ++k) {
            out.push_back(with_resample([&] {
                std::map<std::string, Rational> p{{"a", rng.rational9()},
                                                  {"b", rng.rational9()},
                                                  {"c", rng.rational9()}};
                return verify_novelty(tag, k, p, opt.order);
            }));
        }
    }
    for (unsigned i = 0; i < std::min(opt.cases, 8u); ++i) {
        out.push_back(with_resample([&] {
            int l = rng.uniform(1, 3), m = rng.uniform(1, 3);
            Rational x0 = rng.rational9();
            Rational a = rng.rational9();
            std::vector<Rational> alpha, beta;
            int extra = rng.uniform(0, 2);
            for (int j = 0; j < extra; ++j) alpha.push_back(rng.rational9());
            for (int j = 0; j < l + m + extra - 1; ++j) {
                Rational v = rng.rational9();
                require_generic({v});
                beta.push_back(v);
            }
            return verify_key_lemma(l, m, x0, a, alpha, beta, 8);
        }));
    }
    for (auto& r : out) r.seed = opt.seed + 6;
    return out;
}

std::vector<VerificationReport> run_pairing_suite(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    Rng rng(opt.seed + 2);
    const unsigned cases = std::min<unsigned>(opt.cases, 10);
    // Quadratic pair: base at k in {0,1,2}, companion at k = 0, N in {0,1,2}.
    for (unsigned k = 0; k <= 2; ++k) {
        for (unsigned N = 0; N <= 2; ++N) {
            for (unsigned i = 0; i < cases; ++i) {
                out.push_back(with_resample([&] {
                    Rational a = rng.rational9(), b = rng.rational9(), c = rng.rational9();
                    Rational e = rng.rational9(), f = rng.rational9();
                    Rational d = -a - 2 * Rational(N);
                    auto base = build_identity("thmA2", k, {{"a", d}, {"b", e}, {"c", f}});
                    auto comp = build_identity("thmC2", 0, {{"a", a}, {"b", b}, {"c", c}});
                    require_generic(base);
                    require_generic(comp);
                    return verify_gs_pairing(1, Rational(1), base, comp, N);
                }));
            }
        }
    }
    // First cubic pair.
    for (unsigned k = 0; k <= 2; ++k) {
        for (unsigned N = 0; N <= 2; ++N) {
            for (unsigned i = 0; i < cases; ++i) {
                out.push_back(with_resample([&] {
                    Rational a = rng.rational9(), b = rng.rational9(), e = rng.rational9();
                    Rational d = -a - 3 * Rational(N);
                    auto base = build_identity("thmA3", k, {{"a", d}, {"b", e}});
                    auto comp = build_identity("thmC3", 0, {{"a", a}, {"b", b}});
                    require_generic(base);
                    require_generic(comp);
                    return verify_gs_pairing(2, Rational(1, 4), base, comp, N);
                }));
            }
        }
    }
    for (auto& r : out) r.seed = opt.seed + 2;
    return out;
}

std::vector<VerificationReport> run_kummer_suite(unsigned precision_bits_) {
    std::vector<VerificationReport> out;
    out.push_back(verify_kummer_ext(0, Rational(2), Rational(-1), precision_bits_));
    out.push_back(verify_kummer_ext(1, Rational(2), Rational(-2), precision_bits_));
    out.push_back(verify_kummer_ext(2, Rational(4), Rational(-3), precision_bits_));
    // The middle tuple has the hand-derived rational value 2/3.
    if (kummer_ext_rhs(1, Rational(2), Rational(-2)) != Rational(2, 3))
        throw InternalError("kummer rhs at (1,2,-2) is not 2/3");
    return out;
}

std::vector<VerificationReport> run_specialization_suite(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    Rng rng(opt.seed + 3);

    for (unsigned i = 0; i < opt.cases; ++i) {
        out.push_back(with_resample([&] {
            auto p = sample_transform_params("niblett", 1, rng);
            auto id = build_identity("niblett", 1, p);
            require_generic(id);
            return verify_transform(id, opt.order);
        }));
        out.push_back(with_resample([&] {
            auto p = sample_transform_params("linconstraint", 1, rng);
            auto id = build_identity("linconstraint", 1, p);
            require_generic(id);
            return verify_transform(id, opt.order);
        }));
        for (const std::string name : {"lastmin2", "lastmin3", "rrplus"}) {
            unsigned k = i % (opt.k_max + 1);  // every level appears
            out.push_back(run_random_transform(name, k, opt.order, rng));
        }
    }

    // lastmin2 / rrplus coherence: their right sides coincide with the full
    // identities' right sides under the c = 1/2 + a/2 substitution.
    out.push_back(with_resample([&] {
        VerificationReport rep;
        rep.identity = "specialization-coherence";
        Rational a = rng.rational9(), b = rng.rational9(), d = rng.rational9();
        unsigned k = static_cast<unsigned>(rng.uniform(0, static_cast<int>(opt.k_max)));
        auto lm2 = build_identity("lastmin2", k, {{"a", a}, {"b", b}});
        require_generic(lm2);
        auto a2 = build_identity("thmA2", k,
                                 {{"a", a}, {"b", b}, {"c", Rational(1, 2) + a / 2}});
        require_generic(a2);
        auto rr = build_identity("rrplus", k, {{"a", a}, {"b", b}, {"d", d}});
        require_generic(rr);
        auto b2 = build_identity("thmB2", k,
                                 {{"a", a}, {"b", b}, {"c", Rational(1, 2) + a / 2}, {"d", d}});
        require_generic(b2);
        bool ok = (lm2.rhs.weight == a2.rhs.weight) && (rr.rhs.weight == b2.rhs.weight);
        auto s1 = series_coefficients(lm2.rhs, opt.order);
        auto s2 = series_coefficients(a2.rhs, opt.order);
        auto s3 = series_coefficients(rr.rhs, opt.order);
        auto s4 = series_coefficients(b2.rhs, opt.order);
        ok = ok && !first_mismatch(s1, s2) && !first_mismatch(s3, s4);
        rep.pass = ok;
        rep.k = k;
        return rep;
    }));

    // Numeric entries at the acceptance tolerance.
    const Real tol = pow(Real(10), -40);
    {
        auto id = build_identity_numeric("curious", {});
        auto rep = verify_transform(id, 12, tol);
        out.push_back(rep);

        // Merged-pair coherence: pair form of the weighted rhs collapses to
        // the displayed 4F3 arrays.
        VerificationReport merge_rep;
        merge_rep.identity = "curious-merge";
        merge_rep.mode = "numeric";
        auto pair_form = explicit_pair_form(id.rhs, opt.precision_bits);
        auto s_before = series_coefficients(pair_form, 12);
        auto s_weighted = series_coefficients(id.rhs, 12);
        auto merged = merge_unit_pairs(pair_form, tol * 1000);
        auto s_after = series_coefficients(merged.series, 12);
        auto displayed = curious_merged_form(Rational(1, 6));
        bool arrays_match =
            merged.merged &&
            multiset_equal(merged.series.upper, displayed.upper, tol * 1000) &&
            multiset_equal(merged.series.lower, displayed.lower, tol * 1000);
        merge_rep.pass = arrays_match && !first_mismatch(s_before, s_weighted, tol) &&
                         !first_mismatch(s_after, s_weighted, tol);
        merge_rep.params["upper_size"] = std::to_string(merged.series.upper.size());
        out.push_back(merge_rep);
    }
    for (int sign : {1, -1}) {
        // b must keep the lower parameters off the poles; small rationals do.
        Rational b = Rational(rng.uniform(1, 5), 7);
        auto id = build_identity_numeric("linconstraint2",
                                         {{"b", b}, {"sign", Rational(sign)}});
        out.push_back(verify_transform(id, 12, tol));
    }
    for (auto& r : out) r.seed = opt.seed + 3;
    return out;
}

namespace {

VerificationReport named_check(const std::string& name, const std::function<bool()>& body) {
    VerificationReport rep;
    rep.identity = name;
    rep.pass = body();
    return rep;
}

}  // namespace

std::vector<VerificationReport> run_polynomial_checks(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    Rng rng(opt.seed + 4);
    const auto n = RatPoly::variable();

    auto sample_family = [&](QTag tag, unsigned k, bool with_d) {
        QFamily f{tag, k, rng.rational9(), rng.rational9(), std::nullopt, std::nullopt};
        if (tag == QTag::Q2) f.c = rng.rational9();
        if (with_d) f.d = rng.rational9();
        return f;
    };

    // Representation vs recurrence, degree law, for all six families, k <= 4.
    for (bool with_d : {false, true}) {
        for (QTag tag : {QTag::Q2, QTag::Q3, QTag::Q3p}) {
            std::string label = "raise-" + to_string(tag) + (with_d ? "-4param" : "-3param");
            out.push_back(named_check(label, [&] {
                for (unsigned k = 1; k <= 4; ++k) {
                    for (int rep = 0; rep < 2; ++rep) {
                        bool ok = false;
                        for (int tries = 0; tries < 200 && !ok; ++tries) {
                            try {
                                QFamily f = sample_family(tag, k, with_d);
                                auto direct = q_poly(f);
                                auto prev = q_poly(shifted_predecessor(f));
                                if (master_raise(f, prev) != direct) return false;
                                unsigned want = (tag == QTag::Q2 || !with_d) ? 2 * k : 3 * k;
                                // a vanishing leading coefficient is a parameter
                                // coincidence, not a counterexample: redraw
                                if (direct.degree() != static_cast<int>(want)) continue;
                                ok = true;
                            } catch (const DomainError&) {
                            }
                        }
                        if (!ok) return false;
                    }
                }
                return true;
            }));
        }
    }

    // Displayed k = 1 forms at random rational parameters.
    out.push_back(named_check("displayed-k1-forms", [&] {
        for (int rep = 0; rep < 3; ++rep) {
            Rational a = rng.rational9(), b = rng.rational9(), c = rng.rational9(),
                     d = rng.rational9();
            try {
                RatPoly lambda = n * n + n * a;
                RatPoly expect_q2 = (lambda + RatPoly(b * c)) / (b * c);
                if (q2_weight(1, a, b, c) != expect_q2) return false;
                Rational db = 1 - 4 * b * b;
                if (db != 0) {
                    RatPoly expect_q3 =
                        (n * n * Rational(12) + n * (4 * (1 + 2 * a)) + RatPoly(db)) / db;
                    if (q3_weight(1u, a, b) != expect_q3) return false;
                }
                Rational dp = (1 - 2 * a - 2 * b) * (1 - 2 * a + 2 * b);
                if (dp != 0) {
                    RatPoly expect_q3p =
                        (n * n * Rational(12) - n * (4 * (1 - 4 * a)) + RatPoly(dp)) / dp;
                    if (q3p_weight(1u, a, b) != expect_q3p) return false;
                }
                Rational s = b + c + d - a;
                RatPoly expect_q24 = (lambda * s + RatPoly(b * c * d)) / (b * c * d);
                if (q2_weight4(1, a, b, c, d) != expect_q24) return false;
                RatPoly bracket = lambda * Rational(4) +
                                  RatPoly((a - 1) * (a - 2) + (2 * b + 3) * (2 * c + 3) - 9);
                RatPoly expect_hat =
                    RatPoly::one() + lambda * bracket / ((a + 1) * (a + 2) * b * c);
                if (hat_q2(1, a, b, c) != expect_hat) return false;
            } catch (const DomainError&) {
                --rep;
                continue;
            }
        }
        return true;
    }));

    // The worked instance: Q2 k=1 (5;2,3) prints as (1/6)n^2 + (5/6)n + 1
    // and evaluates to 2 at n = 1.
    out.push_back(named_check("displayed-instance", [&] {
        auto q = q2_weight(1, Rational(5), Rational(2), Rational(3));
        return to_display_string(q) == "(1/6)n^2 + (5/6)n + 1" && q(Rational(1)) == 2;
    }));

    // Bold families: degree 1+4k and recurrence consistency via bold_q.
    out.push_back(named_check("bold-degrees", [&] {
        for (QTag tag : {QTag::Q2, QTag::Q3, QTag::Q3p}) {
            for (unsigned k = 0; k <= 4; ++k) {
                bool ok = false;
                for (int tries = 0; tries < 200 && !ok; ++tries) {
                    try {
                        BoldQFamily f{tag, k, rng.rational9(), rng.rational9(), std::nullopt};
                        if (tag == QTag::Q2) f.c = rng.rational9();
                        auto p = bold_q(f);
                        ok = (p.degree() == static_cast<int>(1 + 4 * k));
                    } catch (const DomainError&) {
                    }
                }
                if (!ok) return false;
            }
        }
        return true;
    }));

    // hat special case equals the recurrence route (checked inside).
    out.push_back(named_check("hat-special", [&] {
        for (unsigned k = 0; k <= 2; ++k) {
            bool ok = false;
            for (int tries = 0; tries < 200 && !ok; ++tries) {
                try {
                    hat_q2_special(k, rng.rational9(), rng.rational9());
                    ok = true;
                } catch (const DomainError&) {
                }
            }
            if (!ok) return false;
        }
        return true;
    }));

    // Lowering: bc * delta(Q_k)/delta(lambda) = k * Q_{k-1,+}, k <= 4.
    out.push_back(named_check("lowering", [&] {
        for (unsigned k = 1; k <= 4; ++k) {
            bool ok = false;
            for (int tries = 0; tries < 200 && !ok; ++tries) {
                try {
                    QFamily f = sample_family(QTag::Q2, k, false);
                    auto low = lower_q2(f, q_poly(f));
                    ok = (low == q_poly(shifted_predecessor(f)) * Rational(k));
                } catch (const DomainError&) {
                }
            }
            if (!ok) return false;
        }
        return true;
    }));

    // Quadratic-lattice symmetry: invariance under n -> -n-a, k <= 4.
    out.push_back(named_check("lattice-symmetry", [&] {
        for (unsigned k = 0; k <= 4; ++k) {
            bool ok = false;
            for (int tries = 0; tries < 200 && !ok; ++tries) {
                try {
                    QFamily f3 = sample_family(QTag::Q2, k, false);
                    auto p3 = q_poly(f3);
                    if (p3.compose_affine(Rational(-1), -f3.a) != p3) return false;
                    QFamily f4 = sample_family(QTag::Q2, k, true);
                    auto p4 = q_poly(f4);
                    if (p4.compose_affine(Rational(-1), -f4.a) != p4) return false;
                    Rational ha = rng.rational9(), hb = rng.rational9(), hc = rng.rational9();
                    auto h = hat_q2(k, ha, hb, hc);
                    if (h.compose_affine(Rational(-1), -ha) != h) return false;
                    ok = true;
                } catch (const DomainError&) {
                }
            }
            if (!ok) return false;
        }
        return true;
    }));

    // d -> infinity: the top d-coefficient of the four-parameter numerator
    // is the three-parameter polynomial.
    out.push_back(named_check("d-limit", [&] {
        for (unsigned k = 0; k <= 3; ++k) {
            bool ok = false;
            for (int tries = 0; tries < 200 && !ok; ++tries) {
                try {
                    Rational a = rng.rational9(), b = rng.rational9(), c = rng.rational9();
                    auto coeffs = q2_weight4_d_numerator(k, a, b, c);
                    ok = (coeffs.size() == k + 1) && (coeffs.back() == q2_weight(k, a, b, c));
                } catch (const DomainError&) {
                }
            }
            if (!ok) return false;
        }
        return true;
    }));

    // P_k: degree, antisymmetry, P_0 = A - B, generating function to t^7.
    out.push_back(named_check("p-family", [&] {
        Rational A = rng.rational9(), B = rng.rational9();
        while (B == A) B = rng.rational9();
        if (p_poly(0, A, B) != RatPoly(A - B)) return false;
        for (unsigned k = 0; k <= 3; ++k) {
            auto p = p_poly(k, A, B);
            if (p.degree() != static_cast<int>(k)) return false;
            if (!(p + p_poly(k, B, A)).is_zero()) return false;
        }
        const unsigned K = 3, T = 2 * K + 1;
        for (int sample = 0; sample < 4; ++sample) {
            Rational nv = rng.rational9();
            TruncatedSeries<Rational> lhs(T);
            for (unsigned k = 0; k <= K; ++k)
                lhs[1 + 2 * k] = p_poly(k, A, B)(nv) / factorial(1 + 2 * k);
            auto s1 = ts_mul(power_prefactor_series(Rational(-1), -nv - A, T),
                             power_prefactor_series(Rational(1), -nv - B, T));
            auto s2 = ts_mul(power_prefactor_series(Rational(-1), -nv - B, T),
                             power_prefactor_series(Rational(1), -nv - A, T));
            for (unsigned t = 0; t <= T; ++t) {
                if (lhs[t] != (s1[t] - s2[t]) / Rational(2)) return false;
            }
        }
        return true;
    }));

    // Bold quadratic: the explicit factor supplies the negated root a/2 and
    // the explicit-pair form is very well poised (numeric, 1e-40).
    out.push_back(named_check("bold-very-well-poised", [&] {
        for (unsigned k : {1u, 2u}) {
            bool ok = false;
            for (int tries = 0; tries < 200 && !ok; ++tries) {
                try {
                    Rational a = rng.rational9(), b = rng.rational9(), c = rng.rational9();
                    auto id = build_identity("thmC2", k, {{"a", a}, {"b", b}, {"c", c}});
                    auto pair_form = explicit_pair_form(id.rhs, opt.precision_bits);
                    auto rep = classify_poisedness(pair_form, pow(Real(10), -40));
                    ok = rep.very_well_poised;
                } catch (const DomainError&) {
                }
            }
            if (!ok) return false;
        }
        return true;
    }));

    for (auto& r : out) r.seed = opt.seed + 4;
    return out;
}

std::vector<VerificationReport> run_negative_controls(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    Rng rng(opt.seed + 5);
    auto one_control = [&](const std::string& name, unsigned k, const std::string& site) {
        return with_resample([&] {
            auto params = sample_transform_params(name, k, rng);
            auto id = build_identity(name, k, params);
            require_generic(id);
            // a nonpositive-integer upper would truncate a series and could
            // leave low coefficients insensitive to the mutation
            for (const auto& v : id.lhs.upper)
                if (npint(v)) throw DomainError("degenerate control instance");
            for (const auto& v : id.rhs.upper)
                if (npint(v)) throw DomainError("degenerate control instance");
            if (!verify_transform(id, opt.order).pass)
                throw DomainError("baseline instance did not pass");
            mutate_identity(id, site);
            auto rep = verify_transform(id, opt.order);
            VerificationReport control;
            control.identity = "negative-control-" + name + "-" + site;
            control.k = k;
            // The control passes when the mutation is caught early.
            control.pass = !rep.pass && rep.first_mismatch && rep.first_mismatch->index <= 3;
            if (rep.first_mismatch)
                control.params["mismatch_index"] = std::to_string(rep.first_mismatch->index);
            return control;
        });
    };
    for (const std::string site :
         {"lhs-upper-0", "lhs-lower-1", "rhs-upper-1", "rhs-lower-0", "prefactor-0", "weight-1"})
        out.push_back(one_control("thmA2", 1, site));
    for (const std::string site : {"lhs-upper-2", "rhs-upper-2", "prefactor-1", "weight-2"})
        out.push_back(one_control("thmC3", 1, site));
    for (auto& r : out) r.seed = opt.seed + 5;
    return out;
}

std::vector<VerificationReport> run_full_suite(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    auto absorb = [&](std::vector<VerificationReport> part) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    };
    absorb(run_transform_suite(opt));
    absorb(run_polynomial_checks(opt));
    absorb(run_summation_suite(opt));
    absorb(run_mechanism_suite(opt));
    absorb(run_pairing_suite(opt));
    absorb(run_kummer_suite(opt.precision_bits));
    absorb(run_specialization_suite(opt));
    absorb(run_negative_controls(opt));
    return out;
}

namespace {

std::map<std::string, Rational> parse_params(const std::map<std::string, std::string>& raw) {
    std::map<std::string, Rational> out;
    for (const auto& [key, val] : raw) out[key] = parse_rational(val);
    return out;
}

Rational at(const std::map<std::string, Rational>& p, const char* key) {
    auto it = p.find(key);
    if (it == p.end()) throw DomainError(std::string("missing parameter '") + key + "'");
    return it->second;
}

int report_and_status(const std::vector<VerificationReport>& reports, const RunConfig& cfg,
                      std::ostream& out) {
    out << emit_report(reports, cfg.format);
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

int run_impl(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    set_precision_bits(cfg.precision_bits);

    if (cfg.command == "qpoly" || cfg.command == "roots") {
        auto p = parse_params(cfg.params);
        RatPoly poly;
        Rational a;
        if (cfg.name == "P") {
            poly = p_poly(cfg.k, at(p, "A"), at(p, "B"));
        } else if (cfg.name.rfind("BQ", 0) == 0) {
            QTag tag = parse_qtag(cfg.name.substr(1));
            BoldQFamily f{tag, cfg.k, at(p, "a"), at(p, "b"), std::nullopt};
            if (tag == QTag::Q2) f.c = at(p, "c");
            a = f.a;
            poly = bold_q(f);
        } else if (cfg.name == "hatQ2") {
            a = at(p, "a");
            poly = hat_q2(cfg.k, a, at(p, "b"), at(p, "c"));
        } else {
            QTag tag = parse_qtag(cfg.name);
            QFamily f{tag, cfg.k, at(p, "a"), at(p, "b"), std::nullopt, std::nullopt};
            if (tag == QTag::Q2) f.c = at(p, "c");
            if (p.count("d")) f.d = at(p, "d");
            a = f.a;
            poly = q_poly(f);
        }
        if (cfg.command == "qpoly") {
            if (cfg.format == "json") {
                std::string coeffs = "[";
                for (size_t i = 0; i < poly.coefficients().size(); ++i)
                    coeffs += (i ? "," : "") + ("\"" + to_string(poly.coefficients()[i]) + "\"");
                out << "{\"family\":\"" << cfg.name << "\",\"k\":" << cfg.k
                    << ",\"coefficients\":" << coeffs << "]}" << "\n";
            } else {
                out << to_display_string(poly) << "\n";
            }
        } else {
            bool q2_like = cfg.name == "Q2" || cfg.name == "hatQ2";
            auto roots = q2_like ? negated_roots_symmetric(poly, a, cfg.precision_bits)
                                 : negated_roots(poly, cfg.precision_bits);
            for (const auto& r : roots) out << to_string(r) << "\n";
        }
        return 0;
    }

    if (cfg.command == "series") {
        auto s = parse_series_description(cfg.series_json);
        auto excess = parametric_excess(s);
        auto poised = classify_poisedness(s);
        auto coeffs = series_coefficients(s, cfg.order);
        if (cfg.format == "json") {
            out << "{\"series\":" << series_description_json(s) << ",\"excess\":\""
                << to_string(excess) << "\",\"well_poised\":" << (poised.well_poised ? "true" : "false")
                << ",\"nearly_poised\":" << (poised.nearly_poised ? "true" : "false")
                << ",\"very_well_poised\":" << (poised.very_well_poised ? "true" : "false")
                << ",\"coefficients\":[";
            for (unsigned i = 0; i <= coeffs.order(); ++i)
                out << (i ? "," : "") << "\"" << to_string(coeffs[i]) << "\"";
            out << "]}" << "\n";
        } else {
            out << "excess: " << to_string(excess) << "\n";
            out << "well_poised: " << (poised.well_poised ? "yes" : "no")
                << "  nearly_poised: " << (poised.nearly_poised ? "yes" : "no")
                << "  very_well_poised: " << (poised.very_well_poised ? "yes" : "no");
            if (poised.mn_poised)
                out << "  (" << poised.mn_poised->first << "," << poised.mn_poised->second
                    << ")-poised";
            out << "\n";
            for (unsigned i = 0; i <= coeffs.order(); ++i)
                out << "c_" << i << " = " << to_string(coeffs[i]) << "\n";
        }
        return 0;
    }

    if (cfg.command == "verify-transform") {
        std::vector<VerificationReport> reports;
        if (is_numeric_only(cfg.name)) {
            auto id = build_identity_numeric(cfg.name, parse_params(cfg.params));
            reports.push_back(verify_transform(id, cfg.order));
        } else {
            auto id = build_identity(cfg.name, cfg.k, parse_params(cfg.params));
            if (cfg.mutate) mutate_identity(id, *cfg.mutate);
            reports.push_back(verify_transform(id, cfg.order));
        }
        return report_and_status(reports, cfg, out);
    }

    if (cfg.command == "verify-novelty") {
        auto rep = verify_novelty(parse_qtag(cfg.name), cfg.k, parse_params(cfg.params),
                                  cfg.order);
        return report_and_status({rep}, cfg, out);
    }

    if (cfg.command == "verify-summation") {
        auto p = parse_params(cfg.params);
        auto n = static_cast<unsigned>(cfg.size_n);
        auto m = static_cast<unsigned>(cfg.size_m);
        std::vector<VerificationReport> reports;
        if (cfg.name == "sheppard") {
            reports.push_back(verify_sheppard(n, at(p, "A"), at(p, "B"), at(p, "D"), at(p, "E")));
        } else if (cfg.name == "whipple43") {
            Rational F = p.count("F")
                             ? at(p, "F")
                             : 1 - Rational(n) + at(p, "A") + at(p, "B") + at(p, "C") - at(p, "D") -
                                   at(p, "E");
            reports.push_back(
                verify_whipple43(n, at(p, "A"), at(p, "B"), at(p, "C"), at(p, "D"), at(p, "E"), F));
        } else if (cfg.name == "rforms") {
            RForm fam = (cfg.variant == "ii") ? RForm::R3 : RForm::R2;
            reports.push_back(verify_r_forms(fam, n, cfg.k, at(p, "a"), at(p, "b"),
                                             p.count("c") ? at(p, "c") : Rational(0)));
        } else if (cfg.name == "ext-whipple") {
            std::optional<Rational> f;
            if (p.count("f")) f = at(p, "f");
            reports.push_back(verify_ext_whipple(cfg.variant, cfg.k, n, at(p, "a"), at(p, "b"),
                                                 at(p, "c"), at(p, "d"), at(p, "e"), f));
        } else if (cfg.name == "bailey1") {
            std::optional<Rational> d;
            if (p.count("d")) d = at(p, "d");
            reports.push_back(
                verify_bailey1(cfg.variant, cfg.k, m, at(p, "a"), at(p, "b"), at(p, "c"),
                               at(p, "w"), d));
        } else if (cfg.name == "bailey2") {
            reports.push_back(
                verify_bailey2(cfg.k, m, at(p, "a"), at(p, "b"), at(p, "c"), at(p, "w")));
        } else if (cfg.name == "kummer") {
            reports.push_back(
                verify_kummer_ext(cfg.k, at(p, "a"), at(p, "b"), cfg.precision_bits));
        } else if (cfg.name == "gs-pairing") {
            // base/companion pair selected by variant: "i" quadratic, "ii" first cubic.
            Rational a = at(p, "a"), b = at(p, "b");
            if (cfg.variant == "ii") {
                Rational d = -a - 3 * Rational(n);
                auto base = build_identity("thmA3", cfg.k, {{"a", d}, {"b", at(p, "e")}});
                auto comp = build_identity("thmC3", 0, {{"a", a}, {"b", b}});
                reports.push_back(verify_gs_pairing(2, Rational(1, 4), base, comp, n));
            } else {
                Rational d = -a - 2 * Rational(n);
                auto base = build_identity(
                    "thmA2", cfg.k, {{"a", d}, {"b", at(p, "e")}, {"c", at(p, "f")}});
                auto comp = build_identity("thmC2", 0,
                                           {{"a", a}, {"b", b}, {"c", at(p, "c")}});
                reports.push_back(verify_gs_pairing(1, Rational(1), base, comp, n));
            }
        } else {
            throw DomainError("unknown summation name: " + cfg.name);
        }
        return report_and_status(reports, cfg, out);
    }

    if (cfg.command == "suite") {
        SuiteOptions opt;
        opt.k_max = cfg.k_max;
        opt.cases = cfg.cases;
        opt.order = cfg.order;
        opt.seed = cfg.seed;
        opt.precision_bits = cfg.precision_bits;
        auto reports = run_full_suite(opt);
        int status = report_and_status(reports, cfg, out);
        unsigned passed = 0;
        for (const auto& r : reports)
            if (r.pass) ++passed;
        err << passed << "/" << reports.size() << " checks passed\n";
        return status;
    }

    throw DomainError("unknown command: " + cfg.command);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(cfg, out, err);
    } catch (const InternalError& ex) {
        err << "internal consistency error: " << ex.what() << "\n";
        return 3;
    } catch (const ConvergenceError& ex) {
        err << "convergence failure: " << ex.what() << " (partial sum " << ex.partial_sum
            << ")\n";
        return 1;
    } catch (const DomainError& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << "unexpected error: " << ex.what() << "\n";
        return 3;
    }
}

}  // namespace hypx
