#include "hypx/summations.hpp"

#include <chrono>

namespace hypx {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

VerificationReport scalar_report(std::string name, const Rational& lhs, const Rational& rhs,
                                 Clock::time_point t0) {
    VerificationReport rep;
    rep.identity = std::move(name);
    rep.pass = (lhs == rhs);
    if (!rep.pass)
        rep.first_mismatch = VerificationReport::Mismatch{0, to_string(lhs), to_string(rhs)};
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Rational poch_ratio(std::initializer_list<Rational> num, std::initializer_list<Rational> den,
                    unsigned n) {
    Rational r(1);
    for (const auto& v : num) r *= pochhammer(v, n);
    for (const auto& v : den) {
        Rational p = pochhammer(v, n);
        if (p == 0) throw DomainError("Pochhammer denominator (" + to_string(v) + ")_n vanishes");
        r /= p;
    }
    return r;
}

}  // namespace

VerificationReport verify_sheppard(unsigned n, const Rational& A, const Rational& B,
                                   const Rational& D, const Rational& E) {
    auto t0 = Clock::now();
    const Rational nn = n;
    const Rational S = nn - A - B + D + E;
    Rational lhs = terminating_sum(WeightedSeries<Rational>{{-nn, A, B}, {D, E}});
    Rational rhs = poch_ratio({D - A, E - A}, {D, E}, n) *
                   terminating_sum(WeightedSeries<Rational>{{-nn, A, 1 - S},
                                                            {1 + A - D - nn, 1 + A - E - nn}});
    auto rep = scalar_report("sheppard", lhs, rhs, t0);
    rep.size_n = static_cast<int>(n);
    rep.params = {{"A", to_string(A)}, {"B", to_string(B)}, {"D", to_string(D)},
                  {"E", to_string(E)}};
    return rep;
}

VerificationReport verify_whipple43(unsigned n, const Rational& A, const Rational& B,
                                    const Rational& C, const Rational& D, const Rational& E,
                                    const Rational& F) {
    auto t0 = Clock::now();
    const Rational nn = n;
    if (nn - A - B - C + D + E + F != 1)
        throw DomainError("whipple43 requires the 1-balance n - A - B - C + D + E + F = 1");
    Rational lhs = terminating_sum(WeightedSeries<Rational>{{-nn, A, B, C}, {D, E, F}});
    Rational rhs = poch_ratio({D - A, E - A}, {D, E}, n) *
                   terminating_sum(WeightedSeries<Rational>{
                       {-nn, A, F - B, F - C}, {1 + A - D - nn, 1 + A - E - nn, F}});
    auto rep = scalar_report("whipple43", lhs, rhs, t0);
    rep.size_n = static_cast<int>(n);
    rep.params = {{"A", to_string(A)}, {"B", to_string(B)}, {"C", to_string(C)},
                  {"D", to_string(D)}, {"E", to_string(E)}, {"F", to_string(F)}};
    return rep;
}

VerificationReport verify_r_forms(RForm family, unsigned n, unsigned k, const Rational& a,
                                  const Rational& b, const Rational& c) {
    auto t0 = Clock::now();
    const Rational nn = n, kk = k, half(1, 2), quarter(1, 4);
    Rational first, second;
    bool prefactor_ok = true;
    if (family == RForm::R2) {
        first = terminating_sum(WeightedSeries<Rational>{{-nn, nn + a, 1 - kk + a - b - c},
                                                         {1 + a - b, 1 + a - c}});
        second = poch_ratio({b, c}, {1 + a - b, 1 + a - c}, n) *
                 terminating_sum(WeightedSeries<Rational>{{-nn, nn + a, -kk}, {b, c}});
    } else {
        first = terminating_sum(WeightedSeries<Rational>{
            {-nn, nn / 2 + a / 2, nn / 2 + half + a / 2},
            {Rational(3, 4) + kk / 2 + a / 2 + b / 2, Rational(3, 4) + kk / 2 + a / 2 - b / 2}});
        Rational pref = poch_ratio({Rational(3, 4) + kk / 2 + b / 2 - nn / 2,
                                    Rational(3, 4) + kk / 2 - b / 2 - nn / 2},
                                   {Rational(3, 4) + kk / 2 + a / 2 + b / 2,
                                    Rational(3, 4) + kk / 2 + a / 2 - b / 2},
                                   n);
        second = pref * terminating_sum(WeightedSeries<Rational>{
                            {-nn, nn / 2 + a / 2, -kk},
                            {quarter - kk / 2 + b / 2 - nn / 2, quarter - kk / 2 - b / 2 - nn / 2}});
        // Pochhammer prefactor reduction: the same ratio written through
        // 4^(k-n) and the k-index factors.
        Rational lhs_p = pochhammer(Rational(3, 4) + kk / 2 + b / 2 - nn / 2, n) *
                         pochhammer(Rational(3, 4) + kk / 2 - b / 2 - nn / 2, n);
        Rational den = pochhammer(half + b, k) * pochhammer(half - b, k);
        if (den == 0) throw DomainError("singular parameters: (1/2 +- b)_k vanishes");
        Rational four_pow = 1;
        for (unsigned i = 0; i < k; ++i) four_pow *= 4;
        for (unsigned i = 0; i < n; ++i) four_pow /= 4;
        Rational rhs_p = four_pow * pochhammer(half - kk - b, n) * pochhammer(half - kk + b, n) *
                         pochhammer(quarter - kk / 2 + b / 2 - nn / 2, k) *
                         pochhammer(quarter - kk / 2 - b / 2 - nn / 2, k) / den;
        prefactor_ok = (lhs_p == rhs_p);
    }
    auto rep = scalar_report(family == RForm::R2 ? "r-forms-R2" : "r-forms-R3", first, second, t0);
    if (!prefactor_ok) {
        rep.pass = false;
        if (!rep.first_mismatch)
            rep.first_mismatch = VerificationReport::Mismatch{0, "prefactor", "reduction"};
    }
    rep.size_n = static_cast<int>(n);
    rep.k = k;
    rep.params = {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}};
    return rep;
}

VerificationReport verify_gs_pairing(int m, const Rational& x0,
                                     const TransformIdentity<Rational>& base,
                                     const TransformIdentity<Rational>& companion, unsigned N) {
    auto t0 = Clock::now();
    if (base.lifting.l != 1 || companion.lifting.l != 1)
        throw DomainError("pairing is stated for l = 1 liftings only");
    if (base.lifting.m != m || companion.lifting.m != m || base.lifting.x0 != x0 ||
        companion.lifting.x0 != x0)
        throw DomainError("pairing requires both identities to share the lifting (1, m; x0)");
    if (base.prefactors.size() != 1)
        throw DomainError("base identity must carry exactly the (1 - x/x0)^alpha prefactor");
    const Rational alpha = base.prefactors[0].exponent;

    // The companion contributes (1 + m x/x0)^-1 (its k = 0 shape) and
    // (1 - x/x0)^alpha_c.
    std::optional<Rational> alpha_c;
    bool unit_companion_factor = false;
    const Rational mx0 = Rational(m) / x0;
    for (const auto& pf : companion.prefactors) {
        if (pf.linear_coeff == -1 / x0) alpha_c = pf.exponent;
        if (pf.linear_coeff == mx0 && pf.exponent == -1) unit_companion_factor = true;
    }
    if (!alpha_c || !unit_companion_factor)
        throw DomainError("companion identity must be the k = 0 case of its family");

    const Rational needed = (1 - alpha - *alpha_c) / Rational(1 + m);
    if (needed != Rational(N))
        throw DomainError("pairing requires N = (1 - alpha - alpha_c)/(1 + m); got N = " +
                          std::to_string(N) + ", need " + to_string(needed));

    auto lhs_prod = ts_mul(series_coefficients(base.lhs, N), series_coefficients(companion.lhs, N));
    auto rhs_prod = ts_mul(series_coefficients(base.rhs, N), series_coefficients(companion.rhs, N));
    Rational factor = 1;
    const Rational ratio = -lifting_prefactor(1, m) / x0;
    for (unsigned i = 0; i < N; ++i) factor *= ratio;
    Rational lhs = rhs_prod[N];
    Rational rhs = factor * lhs_prod[N];

    auto rep = scalar_report("gs-pairing-" + base.name + "-" + companion.name, lhs, rhs, t0);
    rep.k = base.k;
    rep.size_n = static_cast<int>(N);
    return rep;
}

VerificationReport verify_ext_whipple(const std::string& variant, unsigned k, unsigned N,
                                      const Rational& a, const Rational& b, const Rational& c,
                                      const Rational& d, const Rational& e,
                                      std::optional<Rational> f) {
    auto t0 = Clock::now();
    const Rational kk = k, NN = N;
    const bool two = (variant == "ii");
    if (!two && variant != "i") throw DomainError("variant must be 'i' or 'ii'");
    if (two && !f) throw DomainError("variant ii requires parameter f");

    RatPoly Q = two ? q2_weight4(k, -a - 2 * NN, d - a - NN, e - a - NN, *f - a - NN)
                    : q2_weight(k, -a - 2 * NN, d - a - NN, e - a - NN);
    const Rational QN = Q(NN);
    if (QN == 0) throw DomainError("weight polynomial vanishes at N");
    RatPoly R = Q.compose_affine(Rational(-1), NN) / QN;

    auto lhs_series = make_weighted<Rational>(
        {a, 1 + a / 2, b, c, d, e, -NN},
        {a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a + NN}, R);
    // The unweighted core must be very well poised by construction.
    auto core = lhs_series;
    core.weight = RatPoly::one();
    if (!classify_poisedness(core).very_well_poised)
        throw InternalError("ext-whipple core array is not very well poised");
    Rational lhs = terminating_sum(lhs_series);

    Rational rhs;
    if (!two) {
        Rational pref = poch_ratio({1 + a, 1 - kk + a - d - e}, {1 + a - d, 1 + a - e}, N) / QN;
        rhs = pref * terminating_sum(WeightedSeries<Rational>{
                         {1 + a - b - c, d, e, -NN},
                         {1 + a - b, 1 + a - c, kk - a + d + e - NN}});
    } else {
        Rational pref = poch_ratio({1 + a, 1 - kk + a - d - e, 1 - kk + a - *f},
                                   {1 + a - d, 1 + a - e, 1 + a - *f}, N) /
                        QN;
        rhs = pref * terminating_sum(WeightedSeries<Rational>{
                         {1 + a - b - c, d, e, 1 + a - *f, -NN},
                         {1 + a - b, 1 + a - c, kk - a + d + e - NN, 1 - kk + a - *f}});
    }

    auto rep = scalar_report("ext-whipple", lhs, rhs, t0);
    rep.k = k;
    rep.size_n = static_cast<int>(N);
    rep.variant = variant;
    rep.params = {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)},
                  {"d", to_string(d)}, {"e", to_string(e)}};
    if (f) rep.params["f"] = to_string(*f);
    return rep;
}

bool ext_whipple_f_limit_structural(unsigned k, unsigned N, const Rational& a, const Rational& d,
                                    const Rational& e) {
    const auto fvar = RatPoly::variable();
    const Rational kk = k, NN = N;
    // Prefactor factors (1 - k + a - f)_N and (1 + a - f)_N as polynomials
    // in f: same degree, same leading coefficient.
    RatPoly num = pochhammer(RatPoly(1 - kk + a) - fvar, N);
    RatPoly den = pochhammer(RatPoly(1 + a) - fvar, N);
    if (num.degree() != den.degree() || num.leading() != den.leading()) return false;
    // Per-term series factors (1 + a - f)_j / (1 - k + a - f)_j.
    for (unsigned j = 0; j <= N; ++j) {
        RatPoly tn = pochhammer(RatPoly(1 + a) - fvar, j);
        RatPoly td = pochhammer(RatPoly(1 - kk + a) - fvar, j);
        if (tn.degree() != td.degree() || tn.leading() != td.leading()) return false;
    }
    // Weight: the top d-coefficient of the four-parameter numerator is the
    // three-parameter weight; the denominator (d)_k is monic of degree k.
    auto coeffs = q2_weight4_d_numerator(k, -a - 2 * NN, d - a - NN, e - a - NN);
    if (coeffs.size() != k + 1) return false;
    return coeffs.back() == q2_weight(k, -a - 2 * NN, d - a - NN, e - a - NN);
}

VerificationReport verify_bailey1(const std::string& variant, unsigned k, unsigned m,
                                  const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& w, std::optional<Rational> d) {
    auto t0 = Clock::now();
    const Rational kk = k, mm = m, half(1, 2);
    const bool two = (variant == "ii");
    if (!two && variant != "i") throw DomainError("variant must be 'i' or 'ii'");
    if (two && !d) throw DomainError("variant ii requires parameter d");

    std::vector<Rational> lu = {a / 2, half + a / 2, 1 - kk + a - b - c, 1 + a - w, -mm};
    std::vector<Rational> ll = {1 + a - b, 1 + a - c, half + (a - w - mm) / 2,
                                1 + (a - w - mm) / 2};
    RatPoly Q = q2_weight(k, a, b, c);
    if (two) {
        lu.push_back(kk + *d);
        ll.push_back(*d);
        Q = q2_weight4(k, a, b, c, *d);
    }
    WeightedSeries<Rational> lhs_series{lu, ll};
    const Rational excess = parametric_excess(lhs_series);
    const Rational expected_excess = two ? Rational(1) : 1 + kk;
    if (excess != expected_excess)
        throw InternalError("bailey1 balance check failed: excess " + to_string(excess));
    Rational lhs = terminating_sum(lhs_series);

    Rational pref = pochhammer(w, m);
    Rational denom = pochhammer(w - a, m);
    if (denom == 0) throw DomainError("Pochhammer denominator (w - a)_m vanishes");
    pref /= denom;
    Rational rhs = pref * terminating_sum(make_weighted<Rational>(
                              {a, b, c, -mm}, {1 + a - b, 1 + a - c, w}, Q));

    auto rep = scalar_report("bailey1", lhs, rhs, t0);
    rep.k = k;
    rep.size_m = static_cast<int>(m);
    rep.variant = variant;
    rep.params = {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)},
                  {"w", to_string(w)}};
    if (d) rep.params["d"] = to_string(*d);
    return rep;
}

VerificationReport verify_bailey2(unsigned k, unsigned m, const Rational& a, const Rational& b,
                                  const Rational& c, const Rational& w) {
    auto t0 = Clock::now();
    const Rational kk = k, mm = m, half(1, 2);
    const Rational A = 1 + a - w, B = -mm;
    if (A == B)
        throw DomainError("degenerate instance: 1 + a - w = -m makes the weight vanish");
    RatPoly P = p_poly(k, A, B);

    std::vector<Rational> lu = {half + kk + a / 2, 1 + kk + a / 2, 1 - kk + a - b - c, 1 + a - w,
                                -mm};
    std::vector<Rational> ll = {1 + a - b, 1 + a - c, 1 + (a - w + 2 * kk - mm) / 2,
                                Rational(3, 2) + (a - w + 2 * kk - mm) / 2};
    auto lhs_series = make_weighted(lu, ll, P, Rational(1), /*normalization_exempt=*/true);
    // 1-balance after folding in the degree-k weight.
    if (parametric_excess(lhs_series) - Rational(P.degree() < 0 ? 0 : P.degree()) != 1)
        throw InternalError("bailey2 balance check failed");
    Rational lhs = terminating_sum(lhs_series);

    Rational denom = pochhammer(w - a - 1 - 2 * kk, m);
    if (denom == 0) throw DomainError("Pochhammer denominator (w - a - 1 - 2k)_m vanishes");
    Rational pref = pochhammer(1 + a - w, 1 + 2 * k) * pochhammer(w, m) / denom;
    Rational rhs = pref * terminating_sum(make_weighted<Rational>(
                              {a, b, c, -mm}, {1 + a - b, 1 + a - c, w},
                              bold_q({QTag::Q2, k, a, b, c})));

    auto rep = scalar_report("bailey2", lhs, rhs, t0);
    rep.k = k;
    rep.size_m = static_cast<int>(m);
    rep.params = {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)},
                  {"w", to_string(w)}};
    return rep;
}

Rational kummer_ext_rhs(unsigned k, const Rational& a, const Rational& b) {
    if (!is_integer(a) || a < 0 || numerator(a) % 2 != 0)
        throw DomainError("the exact right side requires a to be an even integer >= 0");
    const auto half_a = static_cast<unsigned>(numerator(a) / 2);
    Rational r = factorial(2 * k) / factorial(k);
    r *= pochhammer(1 + a / 2 - b, half_a);
    Rational denom = pochhammer(1 + Rational(k) + a / 2, k + half_a);
    if (denom == 0) throw DomainError("gamma-ratio denominator vanishes");
    return r / denom;
}

VerificationReport verify_kummer_ext(unsigned k, const Rational& a, const Rational& b,
                                     unsigned precision_bits_) {
    auto t0 = Clock::now();
    if (b >= -Rational(k)) throw DomainError("requires b < -k for comfortable convergence");
    const Rational half(1, 2);
    Rational rhs = kummer_ext_rhs(k, a, b);

    RatPoly Q = q2_weight(k, a, b, half + a / 2);
    auto series = convert_series(make_weighted<Rational>({a, b}, {1 + a - b}, Q));
    Real tol = pow(Real(10), -static_cast<int>(precision_bits_ / 10));
    Complex lhs = eval_numeric(series, Complex(-1), 200000, tol / 256);

    VerificationReport rep;
    rep.identity = "kummer-ext";
    rep.k = k;
    rep.mode = "numeric";
    rep.params = {{"a", to_string(a)}, {"b", to_string(b)}};
    Real err = abs(lhs - Complex(rhs));
    rep.pass = err < tol;
    if (!rep.pass)
        rep.first_mismatch =
            VerificationReport::Mismatch{0, to_string(lhs), to_string(rhs)};
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace hypx
