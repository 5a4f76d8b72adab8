#include "hypx/transform.hpp"

#include <boost/math/constants/constants.hpp>
#include <chrono>

namespace hypx {

Rational lifting_prefactor(int l, int m) {
    Rational num = 1, den = 1;
    for (int i = 0; i < l + m; ++i) num *= (l + m);
    for (int i = 0; i < l; ++i) den *= l;
    for (int i = 0; i < m; ++i) den *= m;
    return num / den;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Rational need(const std::map<std::string, Rational>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw DomainError("missing parameter '" + key + "'");
    return it->second;
}

const Rational kHalf{1, 2};
const Rational kQuarter{1, 4};

}  // namespace

const std::vector<std::string>& transform_registry() {
    static const std::vector<std::string> names = {
        "thmA2", "thmA3", "thmA3p", "thmB2", "thmB3", "thmB3p",
        "thmC2", "thmC3", "thmC3p", "niblett", "linconstraint", "linconstraint2",
        "curious", "lastmin2", "lastmin3", "rrplus"};
    return names;
}

bool is_numeric_only(const std::string& name) {
    return name == "curious" || name == "linconstraint2";
}

TransformIdentity<Rational> build_identity(const std::string& name, unsigned k,
                                           const std::map<std::string, Rational>& params) {
    TransformIdentity<Rational> id;
    id.name = name;
    id.k = k;
    id.params = params;
    const Rational kk = k;

    auto rhs_from_family = [&](const QFamily& fam, RatPoly weight) {
        auto arr = family_transform_arrays(fam);
        std::vector<Rational> upper = {fam.a};
        upper.insert(upper.end(), arr.gamma.begin(), arr.gamma.end());
        id.rhs = make_weighted(std::move(upper), std::move(arr.delta), std::move(weight));
    };

    if (name == "thmA2" || name == "thmB2") {
        Rational a = need(params, "a"), b = need(params, "b"), c = need(params, "c");
        id.lifting = family_lifting(QTag::Q2);
        std::vector<Rational> lu = {a / 2, kHalf + a / 2, 1 - kk + a - b - c};
        std::vector<Rational> ll = {1 + a - b, 1 + a - c};
        QFamily fam{QTag::Q2, k, a, b, c, std::nullopt};
        if (name == "thmB2") {
            Rational d = need(params, "d");
            lu.push_back(kk + d);
            ll.push_back(d);
            fam.d = d;
        }
        id.lhs = make_weighted<Rational>(std::move(lu), std::move(ll));
        id.prefactors = {{Rational(-1), a}};
        rhs_from_family(fam, q_poly(fam));
    } else if (name == "thmA3" || name == "thmB3") {
        Rational a = need(params, "a"), b = need(params, "b");
        id.lifting = family_lifting(QTag::Q3);
        std::vector<Rational> lu = {a / 3, Rational(1, 3) + a / 3, Rational(2, 3) + a / 3};
        std::vector<Rational> ll = {Rational(3, 4) + kk / 2 + a / 2 + b / 2,
                                    Rational(3, 4) + kk / 2 + a / 2 - b / 2};
        QFamily fam{QTag::Q3, k, a, b, std::nullopt, std::nullopt};
        if (name == "thmB3") {
            Rational d = need(params, "d");
            lu.push_back(kk + d);
            ll.push_back(d);
            fam.d = d;
        }
        id.lhs = make_weighted<Rational>(std::move(lu), std::move(ll));
        id.prefactors = {{Rational(-4), a}};
        rhs_from_family(fam, q_poly(fam));
    } else if (name == "thmA3p" || name == "thmB3p") {
        Rational a = need(params, "a"), b = need(params, "b");
        id.lifting = family_lifting(QTag::Q3p);
        std::vector<Rational> lu = {a / 3, Rational(1, 3) + a / 3, Rational(2, 3) + a / 3};
        std::vector<Rational> ll = {Rational(3, 4) + kk / 2 + a / 2 + b / 2,
                                    Rational(3, 4) + kk / 2 + a / 2 - b / 2};
        QFamily fam{QTag::Q3p, k, a, b, std::nullopt, std::nullopt};
        if (name == "thmB3p") {
            Rational d = need(params, "d");
            lu.push_back(kk + d);
            ll.push_back(d);
            fam.d = d;
        }
        id.lhs = make_weighted<Rational>(std::move(lu), std::move(ll));
        id.prefactors = {{Rational(-1, 4), a}};
        rhs_from_family(fam, q_poly(fam));
    } else if (name == "thmC2") {
        Rational a = need(params, "a"), b = need(params, "b"), c = need(params, "c");
        id.lifting = family_lifting(QTag::Q2);
        id.lhs = make_weighted<Rational>({kHalf + kk + a / 2, 1 + kk + a / 2, 1 - kk + a - b - c},
                               {1 + a - b, 1 + a - c});
        id.prefactors = {{Rational(1), -1 - 2 * kk}, {Rational(-1), 1 + 2 * kk + a}};
        QFamily fam{QTag::Q2, k, a, b, c, std::nullopt};
        rhs_from_family(fam, bold_q({QTag::Q2, k, a, b, c}));
    } else if (name == "thmC3") {
        Rational a = need(params, "a"), b = need(params, "b");
        id.lifting = family_lifting(QTag::Q3);
        id.lhs = make_weighted<Rational>({Rational(1, 3) + 2 * kk / 3 + a / 3,
                                Rational(2, 3) + 2 * kk / 3 + a / 3, 1 + 2 * kk / 3 + a / 3},
                               {Rational(3, 4) + kk / 2 + a / 2 + b / 2,
                                Rational(3, 4) + kk / 2 + a / 2 - b / 2});
        id.prefactors = {{Rational(8), -1 - 2 * kk}, {Rational(-4), 1 + 2 * kk + a}};
        QFamily fam{QTag::Q3, k, a, b, std::nullopt, std::nullopt};
        rhs_from_family(fam, bold_q({QTag::Q3, k, a, b, std::nullopt}));
    } else if (name == "thmC3p") {
        Rational a = need(params, "a"), b = need(params, "b");
        id.lifting = family_lifting(QTag::Q3p);
        id.lhs = make_weighted<Rational>({Rational(1, 3) + 2 * kk / 3 + a / 3,
                                Rational(2, 3) + 2 * kk / 3 + a / 3, 1 + 2 * kk / 3 + a / 3},
                               {Rational(3, 4) + kk / 2 + a / 2 + b / 2,
                                Rational(3, 4) + kk / 2 + a / 2 - b / 2});
        id.prefactors = {{Rational(1, 8), -1 - 2 * kk}, {Rational(-1, 4), 1 + 2 * kk + a}};
        QFamily fam{QTag::Q3p, k, a, b, std::nullopt, std::nullopt};
        rhs_from_family(fam, bold_q({QTag::Q3p, k, a, b, std::nullopt}));
    } else if (name == "niblett") {
        if (k != 1) throw DomainError("'niblett' is the k = 1 quadratic; pass k = 1");
        id = build_identity("thmA2", 1, params);
        id.name = name;
    } else if (name == "linconstraint") {
        if (k != 1) throw DomainError("'linconstraint' is a k = 1 specialization; pass k = 1");
        Rational b = need(params, "b"), c = need(params, "c");
        Rational a = -b - c;
        id.lifting = family_lifting(QTag::Q2);
        id.lhs = make_weighted<Rational>({-b / 2 - c / 2, kHalf - b / 2 - c / 2, -2 * b - 2 * c},
                               {1 - 2 * b - c, 1 - b - 2 * c});
        id.prefactors = {{Rational(-1), a}};
        // Linearly-constrained explicit pairs: the weight's negated roots
        // land at -b and -c, so the pairs can be written out directly.
        id.rhs = make_weighted<Rational>({a, b, c, 1 - b, 1 - c},
                                         {1 - 2 * b - c, 1 - b - 2 * c, -c, -b});
    } else if (name == "lastmin2") {
        Rational a = need(params, "a"), b = need(params, "b");
        id.lifting = family_lifting(QTag::Q2);
        id.lhs = make_weighted<Rational>({a / 2, kHalf - kk + a / 2 - b}, {1 + a - b});
        id.prefactors = {{Rational(-1), a}};
        id.rhs = make_weighted<Rational>({a, b}, {1 + a - b}, q2_weight(k, a, b, kHalf + a / 2));
    } else if (name == "lastmin3") {
        Rational a = need(params, "a");
        Rational b = Rational(1, 6) + kk + a / 3;
        id.lifting = family_lifting(QTag::Q3);
        id.lhs = make_weighted<Rational>({a / 3, Rational(1, 3) + a / 3}, {Rational(5, 6) + kk + 2 * a / 3});
        id.prefactors = {{Rational(-4), a}};
        id.rhs = make_weighted<Rational>({a, Rational(1, 3) - 2 * kk - a / 3},
                               {Rational(5, 6) + kk + 2 * a / 3}, q3_weight(k, a, b));
    } else if (name == "rrplus") {
        Rational a = need(params, "a"), b = need(params, "b"), d = need(params, "d");
        id.lifting = family_lifting(QTag::Q2);
        id.lhs = make_weighted<Rational>({a / 2, kHalf - kk + a / 2 - b, kk + d}, {1 + a - b, d});
        id.prefactors = {{Rational(-1), a}};
        id.rhs = make_weighted<Rational>({a, b}, {1 + a - b}, q2_weight4(k, a, b, kHalf + a / 2, d));
    } else if (is_numeric_only(name)) {
        throw DomainError("identity '" + name + "' has irrational parameters; use numeric mode");
    } else {
        throw DomainError("unknown identity name: " + name);
    }
    return id;
}

namespace {

struct CuriousParams {
    Complex a, b, sin_theta, cos_theta, sqrt3;
};

CuriousParams curious_params(const Rational& theta_over_pi) {
    const Real pi = boost::math::constants::pi<Real>();
    Real theta = to_real(theta_over_pi) * pi;
    CuriousParams p;
    p.sqrt3 = Complex(sqrt(Real(3)));
    p.sin_theta = Complex(sin(theta));
    p.cos_theta = Complex(cos(theta));
    p.a = Complex(Real(-1) / 2) + p.sqrt3 * p.sin_theta;
    p.b = p.cos_theta;
    return p;
}

}  // namespace

TransformIdentity<Complex> build_identity_numeric(const std::string& name,
                                                  const std::map<std::string, Rational>& params) {
    TransformIdentity<Complex> id;
    id.name = name;
    id.k = 1;
    const Complex half(Real(1) / 2);
    if (name == "curious") {
        Rational top = params.count("theta_over_pi") ? params.at("theta_over_pi") : Rational(1, 6);
        auto p = curious_params(top);
        id.params = {{"a", p.a}, {"b", p.b}};
        id.lifting = family_lifting(QTag::Q3);
        Complex third = Complex(Real(1) / 3);
        std::vector<Complex> lu = {p.a * third, third + p.a * third,
                                   Complex(Real(2) / 3) + p.a * third};
        std::vector<Complex> ll = {Complex(Real(3) / 4) + half + (p.a + p.b) * half,
                                   Complex(Real(3) / 4) + half + (p.a - p.b) * half};
        id.lhs = make_weighted(std::move(lu), std::move(ll));
        id.prefactors = {{Complex(-4), p.a}};
        std::vector<Complex> ru = {p.a, -half - p.b, -half + p.b};
        std::vector<Complex> rl = id.lhs.lower;
        id.rhs = make_weighted(std::move(ru), std::move(rl), q3_weight(1u, p.a, p.b));
    } else if (name == "linconstraint2") {
        Rational b = need(params, "b");
        Rational sign = params.count("sign") ? params.at("sign") : Rational(1);
        if (sign != 1 && sign != -1) throw DomainError("sign must be 1 or -1");
        Complex s3((sign > 0 ? 1 : -1) * sqrt(Real(3)));
        Complex bb{to_real(b)};
        Complex a = Complex(Real(-1) / 2) + s3 * half;
        id.params = {{"a", a}, {"b", bb}};
        id.lifting = family_lifting(QTag::Q3);
        Complex sixth = s3 / Complex(6);
        std::vector<Complex> lu = {Complex(Real(-1) / 6) + sixth, Complex(Real(1) / 6) + sixth,
                                   half + sixth};
        std::vector<Complex> ll = {Complex(1) + s3 / Complex(4) + bb * half,
                                   Complex(1) + s3 / Complex(4) - bb * half};
        id.lhs = make_weighted(std::move(lu), std::move(ll));
        id.prefactors = {{Complex(-4), a}};
        std::vector<Complex> ru = {a, -half - bb, -half + bb};
        std::vector<Complex> rl = id.lhs.lower;
        id.rhs = make_weighted(std::move(ru), std::move(rl), q3_weight(1u, a, bb));
    } else {
        throw DomainError("identity '" + name + "' has no numeric-only build");
    }
    return id;
}

WeightedSeries<Complex> curious_merged_form(const Rational& theta_over_pi) {
    auto p = curious_params(theta_over_pi);
    const Real pi = boost::math::constants::pi<Real>();
    Real theta = to_real(theta_over_pi) * pi;
    const Complex half(Real(1) / 2);
    Complex xi1 = -half + p.sqrt3 / Complex(3) * p.sin_theta;
    std::vector<Complex> up = {p.a, -half - p.cos_theta, -half + p.cos_theta, xi1 + Complex(2)};
    std::vector<Complex> lo = {Complex(1) + Complex(sin(theta + pi / 6)),
                               Complex(1) + Complex(sin(theta - pi / 6)), xi1};
    return make_weighted(std::move(up), std::move(lo));
}

template <typename S>
VerificationReport verify_transform(const TransformIdentity<S>& id, unsigned order,
                                    const Real& tol_in) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.identity = id.name;
    rep.k = id.k;
    rep.order = order;
    rep.mode = std::is_same_v<S, Rational> ? "exact" : "numeric";
    for (const auto& [key, val] : id.params) rep.params[key] = ScalarOps<S>::str(val);

    auto outer = series_coefficients(id.lhs, order);
    auto inner = lifting_series<S>(id.lifting, order);
    auto lhs = ts_compose(outer, inner);
    auto rhs = series_coefficients(id.rhs, order);
    for (const auto& pf : id.prefactors)
        rhs = ts_mul(rhs, power_prefactor_series(pf.linear_coeff, pf.exponent, order));

    Real tol = tol_in;
    if constexpr (!std::is_same_v<S, Rational>) {
        if (tol == 0) {
            // default numeric threshold: 10^-(0.15 * precision bits)
            tol = pow(Real(10), -static_cast<int>(0.15 * precision_bits()));
        }
    }
    auto mm = first_mismatch(lhs, rhs, tol);
    rep.pass = !mm.has_value();
    if (mm)
        rep.first_mismatch = VerificationReport::Mismatch{
            mm->index, ScalarOps<S>::str(mm->lhs), ScalarOps<S>::str(mm->rhs)};
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

template VerificationReport verify_transform<Rational>(const TransformIdentity<Rational>&,
                                                       unsigned, const Real&);
template VerificationReport verify_transform<Complex>(const TransformIdentity<Complex>&,
                                                      unsigned, const Real&);

VerificationReport verify_novelty(QTag family, unsigned k,
                                  const std::map<std::string, Rational>& params, unsigned order) {
    auto t0 = Clock::now();
    if (k < 1) throw DomainError("verify_novelty requires k >= 1");
    VerificationReport rep;
    rep.identity = "novelty-" + to_string(family);
    rep.k = k;
    rep.order = order;
    for (const auto& [key, val] : params) rep.params[key] = to_string(val);

    Rational a = need(params, "a"), b = need(params, "b");
    std::optional<Rational> c;
    if (family == QTag::Q2) c = need(params, "c");
    QFamily fam{family, k, a, b, c, std::nullopt};
    QFamily prev = shifted_predecessor(fam);
    const auto lift = family_lifting(family);
    const Rational la = a * Rational(lift.l) / Rational(lift.l + lift.m);
    if (la == 0) throw DomainError("singular parameters: l*a/(l+m) vanishes");

    // Side 1: weight (n + la)/la * Q_k at level-k parameters.
    auto arr = family_transform_arrays(fam);
    RatPoly weight1 = (RatPoly::variable() + RatPoly(la)) * q_poly(fam) / la;
    std::vector<Rational> up1 = {a};
    up1.insert(up1.end(), arr.gamma.begin(), arr.gamma.end());
    WeightedSeries<Rational> s1{up1, arr.delta, weight1, Rational(1), true};
    auto side1 = series_coefficients(s1, order);

    // Side 2: (1 + (m/l)(x/x0)) times the series with weight Q_{k-1,+}.
    auto arr2 = family_transform_arrays(prev);
    std::vector<Rational> up2 = {prev.a};
    up2.insert(up2.end(), arr2.gamma.begin(), arr2.gamma.end());
    auto s2 = make_weighted(up2, arr2.delta, q_poly(prev));
    auto side2 = series_coefficients(s2, order);
    TruncatedSeries<Rational> lin(order);
    lin[0] = 1;
    if (order >= 1) lin[1] = Rational(lift.m) / (Rational(lift.l) * lift.x0);
    side2 = ts_mul(side2, lin);

    auto mm = first_mismatch(side1, side2);
    rep.pass = !mm.has_value();
    if (mm)
        rep.first_mismatch =
            VerificationReport::Mismatch{mm->index, to_string(mm->lhs), to_string(mm->rhs)};
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport verify_key_lemma(int l, int m, const Rational& x0, const Rational& a,
                                    const std::vector<Rational>& alpha,
                                    const std::vector<Rational>& beta, unsigned order) {
    auto t0 = Clock::now();
    if (l < 1 || m < 1) throw DomainError("key lemma requires l, m >= 1");
    if (static_cast<size_t>(l + m) + alpha.size() != beta.size() + 1)
        throw DomainError("key lemma requires l + m + |alpha| = |beta| + 1");
    VerificationReport rep;
    rep.identity = "key-lemma";
    rep.order = order;
    rep.params["a"] = to_string(a);
    rep.params["x0"] = to_string(x0);
    rep.params["l"] = std::to_string(l);
    rep.params["m"] = std::to_string(m);

    LiftingMap map{l, m, x0};
    std::vector<Rational> lu = delta_array(static_cast<unsigned>(l + m), a);
    lu.insert(lu.end(), alpha.begin(), alpha.end());
    auto outer = series_coefficients(WeightedSeries<Rational>{lu, beta}, order);
    auto lhs = ts_compose(outer, lifting_series<Rational>(map, order));

    // Right side: (1 - x/x0)^a * sum_n (a)_n/(1)_n R(n) (x/x0)^n with R(n)
    // evaluated per-n as a terminating sum.
    WeightedSeries<Rational> core{{a}, {}, RatPoly::one(), 1 / x0};
    auto rhs = series_coefficients(core, order);
    for (unsigned n = 0; n <= order; ++n) {
        std::vector<Rational> up = delta_array(static_cast<unsigned>(l), Rational(-(int)n));
        auto mid = delta_array(static_cast<unsigned>(m), Rational(static_cast<int>(n)) + a);
        up.insert(up.end(), mid.begin(), mid.end());
        up.insert(up.end(), alpha.begin(), alpha.end());
        rhs[n] = rhs[n] * terminating_sum(WeightedSeries<Rational>{up, beta});
    }
    rhs = ts_mul(rhs, power_prefactor_series(-1 / x0, a, order));

    auto mm = first_mismatch(lhs, rhs);
    rep.pass = !mm.has_value();
    if (mm)
        rep.first_mismatch =
            VerificationReport::Mismatch{mm->index, to_string(mm->lhs), to_string(mm->rhs)};
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

void mutate_identity(TransformIdentity<Rational>& id, const std::string& site) {
    const Rational bump(1, 7);
    auto bad = [&]() { throw DomainError("unknown mutation site: " + site); };
    auto parse_index = [&](size_t prefix_len) -> size_t {
        return static_cast<size_t>(std::stoul(site.substr(prefix_len)));
    };
    if (site.rfind("lhs-upper-", 0) == 0) {
        id.lhs.upper.at(parse_index(10)) += bump;
    } else if (site.rfind("lhs-lower-", 0) == 0) {
        id.lhs.lower.at(parse_index(10)) += bump;
    } else if (site.rfind("rhs-upper-", 0) == 0) {
        id.rhs.upper.at(parse_index(10)) += bump;
    } else if (site.rfind("rhs-lower-", 0) == 0) {
        id.rhs.lower.at(parse_index(10)) += bump;
    } else if (site.rfind("prefactor-", 0) == 0) {
        id.prefactors.at(parse_index(10)).exponent += bump;
    } else if (site.rfind("weight-", 0) == 0) {
        auto coeffs = id.rhs.weight.coefficients();
        size_t i = parse_index(7);
        if (i >= coeffs.size()) throw DomainError("weight coefficient index out of range");
        coeffs[i] += bump;
        id.rhs.weight = RatPoly(std::move(coeffs));
    } else {
        bad();
    }
}

}  // namespace hypx
