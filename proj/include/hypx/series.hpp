#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hypx/errors.hpp"
#include "hypx/pochhammer.hpp"
#include "hypx/polynomial.hpp"
#include "hypx/roots.hpp"
#include "hypx/truncated_series.hpp"

namespace hypx {

/// The m-entry array (mu/m, 1/m + mu/m, ..., (m-1)/m + mu/m).
template <typename S>
std::vector<S> delta_array(unsigned m, const S& mu) {
    if (m < 1) throw DomainError("delta_array requires m >= 1");
    std::vector<S> out;
    out.reserve(m);
    for (unsigned i = 0; i < m; ++i)
        out.push_back((mu + S(static_cast<int>(i))) / S(static_cast<int>(m)));
    return out;
}

/// Order-insensitive equality of parameter arrays.
template <typename S>
bool multiset_equal(std::vector<S> a, std::vector<S> b, const Real& tol = Real(0)) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && ScalarOps<S>::near(x, b[j], tol)) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

/// Hypergeometric series with an optional polynomial weight: the terms are
///   prod(upper)_n / ((1)_n prod(lower)_n) * weight(n) * (scale*x)^n.
/// Weights are normalized to weight(0) = 1 unless normalization_exempt.
template <typename S>
struct WeightedSeries {
    std::vector<S> upper;
    std::vector<S> lower;
    Polynomial<S> weight = Polynomial<S>::one();
    S scale = S(1);
    bool normalization_exempt = false;
};

template <typename S>
WeightedSeries<S> make_weighted(std::vector<S> upper, std::vector<S> lower,
                                Polynomial<S> weight = Polynomial<S>::one(), S scale = S(1),
                                bool normalization_exempt = false) {
    if (!normalization_exempt) {
        S w0 = weight(S(0));
        bool ok;
        if constexpr (std::is_same_v<S, Rational>) {
            ok = (w0 == 1);
        } else {
            Real tol = ldexp(Real(1), -static_cast<int>(precision_bits()) / 2);
            ok = ScalarOps<S>::near(w0, S(1), tol);
        }
        if (!ok) throw DomainError("weight polynomial must satisfy Q(0) = 1");
    }
    return WeightedSeries<S>{std::move(upper), std::move(lower), std::move(weight),
                             std::move(scale), normalization_exempt};
}

/// Sum of lower parameters minus sum of upper parameters, over the explicit
/// arrays only (a nonconstant weight is not folded in).
template <typename S>
S parametric_excess(const WeightedSeries<S>& s) {
    S acc(0);
    for (const auto& v : s.lower) acc += v;
    for (const auto& v : s.upper) acc -= v;
    return acc;
}

/// Exact truncated expansion; honors termination by an upper nonpositive
/// integer. In exact mode a lower-parameter pole that is hit before the
/// series terminates raises DomainError naming the parameter.
template <typename S>
TruncatedSeries<S> series_coefficients(const WeightedSeries<S>& s, unsigned order) {
    TruncatedSeries<S> out(order);
    S core(1);
    bool dead = false;
    for (unsigned n = 0; n <= order; ++n) {
        out[n] = core * s.weight(S(static_cast<int>(n)));
        if (dead || n == order) continue;
        S num(1);
        for (const auto& u : s.upper) num = num * (u + S(static_cast<int>(n)));
        if constexpr (std::is_same_v<S, Rational>) {
            if (num == 0) {
                dead = true;
                core = S(0);
                continue;
            }
            for (const auto& l : s.lower)
                if (l + S(static_cast<int>(n)) == 0)
                    throw DomainError("lower parameter " + to_string(l) +
                                      " hits a nonpositive integer at n = " +
                                      std::to_string(n + 1));
        }
        S den(static_cast<int>(n) + 1);
        for (const auto& l : s.lower) den = den * (l + S(static_cast<int>(n)));
        core = core * num / den * s.scale;
    }
    return out;
}

/// Index M of the last term of a terminating series (some upper parameter
/// equals -M). Throws DomainError if no upper parameter is a nonpositive
/// integer.
unsigned termination_index(const WeightedSeries<Rational>& s);

/// Exact finite sum at x = 1 of a terminating series.
Rational terminating_sum(const WeightedSeries<Rational>& s);

/// Coefficient map c_n -> (1 + n/e) c_n, the series-level action of the
/// operator that increments an upper parameter e.
template <typename S>
TruncatedSeries<S> apply_contiguity(const TruncatedSeries<S>& t, const S& e) {
    if (ScalarOps<S>::is_zero(e)) throw DomainError("contiguity operator requires e != 0");
    TruncatedSeries<S> r = t;
    for (unsigned n = 0; n <= r.order(); ++n)
        r[n] = r[n] * (S(1) + S(static_cast<int>(n)) / e);
    return r;
}

WeightedSeries<Complex> convert_series(const WeightedSeries<Rational>& s);
inline const WeightedSeries<Complex>& convert_series(const WeightedSeries<Complex>& s) {
    return s;
}

/// Equivalent series with weight 1 and deg(Q) appended unit-difference
/// parameter pairs (1+xi upper, xi lower) built from the negated roots of
/// the weight. Numeric output; the input weight must satisfy Q(0) = 1.
template <typename S>
WeightedSeries<Complex> explicit_pair_form(const WeightedSeries<S>& s, unsigned bits) {
    const WeightedSeries<Complex>& num = convert_series(s);
    if (num.weight.is_constant()) {
        if (!ScalarOps<Complex>::near(num.weight(Complex(0)), Complex(1),
                                      ldexp(Real(1), -static_cast<int>(bits) / 2)))
            throw DomainError("explicit_pair_form: weight normalization Q(0) = 1 violated");
        return num;
    }
    Real tol = ldexp(Real(1), -static_cast<int>(bits) / 2);
    if (!ScalarOps<Complex>::near(num.weight(Complex(0)), Complex(1), tol))
        throw DomainError("explicit_pair_form: weight normalization Q(0) = 1 violated");
    WeightedSeries<Complex> out = num;
    out.weight = CxPoly::one();
    for (const auto& xi : negated_roots(num.weight, bits)) {
        if (xi.im == 0 || abs(Complex(Real(0), xi.im)) < tol) {
            Real rounded = round(xi.re);
            if (rounded <= 0 && abs(Complex(xi.re - rounded, xi.im)) < tol)
                throw DomainError("explicit_pair_form: negated root " + to_string(xi) +
                                  " is a nonpositive integer (pole)");
        }
        out.upper.push_back(xi + Complex(1));
        out.lower.push_back(xi);
    }
    return out;
}

template <typename S>
struct MergeResult {
    WeightedSeries<S> series;
    bool merged = false;
};

/// Replaces two unit-difference pairs (1+xi, xi), (2+xi, 1+xi) by the single
/// pair (2+xi, xi); concretely, removes one value v = 1+xi present in both
/// arrays with v+1 in the upper array and v-1 in the lower one. No mergeable
/// pairs is a no-op with merged = false.
template <typename S>
MergeResult<S> merge_unit_pairs(const WeightedSeries<S>& s, const Real& tol = Real(0)) {
    auto contains = [&](const std::vector<S>& arr, const S& v, size_t skip = SIZE_MAX) {
        for (size_t i = 0; i < arr.size(); ++i)
            if (i != skip && ScalarOps<S>::near(arr[i], v, tol)) return i;
        return SIZE_MAX;
    };
    for (size_t iu = 0; iu < s.upper.size(); ++iu) {
        const S& v = s.upper[iu];
        size_t il = contains(s.lower, v);
        if (il == SIZE_MAX) continue;
        if (contains(s.upper, v + S(1), iu) == SIZE_MAX) continue;
        if (contains(s.lower, v - S(1), il) == SIZE_MAX) continue;
        MergeResult<S> r{s, true};
        r.series.upper.erase(r.series.upper.begin() + static_cast<long>(iu));
        r.series.lower.erase(r.series.lower.begin() + static_cast<long>(il));
        return r;
    }
    return {s, false};
}

/// Partial numeric sum at argument x with a monitored tail: three
/// consecutive terms below tail_tol * (|partial| + 1) stop the summation.
/// A slowly converging alternating tail (x on the negative real axis) falls
/// back to accelerated summation. Failure raises ConvergenceError carrying
/// the last partial sum.
Complex eval_numeric(const WeightedSeries<Complex>& s, const Complex& x, unsigned max_terms,
                     const Real& tail_tol);

struct PoisednessReport {
    Rational excess;  // exact-mode only; numeric classification leaves it 0
    bool well_poised = false;
    bool nearly_poised = false;
    bool very_well_poised = false;
    std::optional<std::pair<int, int>> mn_poised;
};

/// Applies the parameter-pair sum tests over all admissible permutations of
/// the arrays. very_well_poised additionally requires a pair equal to
/// (1 + a0/2, a0/2).
template <typename S>
PoisednessReport classify_poisedness(const WeightedSeries<S>& s, const Real& tol = Real(0)) {
    PoisednessReport rep;
    if constexpr (std::is_same_v<S, Rational>) rep.excess = parametric_excess(s);
    const auto& up = s.upper;
    const auto& lo = s.lower;
    if (up.size() != lo.size() + 1) return rep;
    const size_t r = lo.size();

    // Greedy value-determined matching: partner of u at pair-sum v is v - u.
    auto max_matching = [&](const std::vector<S>& us, const S& target, int mu, int nl) {
        std::vector<bool> used(lo.size(), false);
        size_t matched = 0;
        for (const auto& u : us) {
            for (size_t j = 0; j < lo.size(); ++j) {
                if (used[j]) continue;
                if (ScalarOps<S>::near(S(mu) * u + S(nl) * lo[j], target, tol)) {
                    used[j] = true;
                    ++matched;
                    break;
                }
            }
        }
        return matched;
    };

    for (size_t i = 0; i < up.size(); ++i) {
        std::vector<S> rest;
        for (size_t j = 0; j < up.size(); ++j)
            if (j != i) rest.push_back(up[j]);
        const S a0 = up[i];
        size_t m = max_matching(rest, a0 + S(1), 1, 1);
        if (m == r) {
            rep.well_poised = true;
            // The distinguished pair sums to 1 + a0 automatically, so its
            // presence in the arrays suffices.
            S half = a0 / S(2);
            bool has_u = false, has_l = false;
            for (const auto& u : rest)
                if (ScalarOps<S>::near(u, half + S(1), tol)) has_u = true;
            for (const auto& l : lo)
                if (ScalarOps<S>::near(l, half, tol)) has_l = true;
            if (has_u && has_l) rep.very_well_poised = true;
        } else if (r >= 2 && m + 1 == r) {
            rep.nearly_poised = true;
        }
        // The odd sum may also be the a0 + 1 slot itself.
        if (r >= 1 && !rep.nearly_poised) {
            for (const auto& u : rest) {
                for (const auto& l : lo) {
                    S v = u + l;
                    if (ScalarOps<S>::near(v, a0 + S(1), tol)) continue;
                    if (max_matching(rest, v, 1, 1) == r) {
                        rep.nearly_poised = true;
                        break;
                    }
                }
                if (rep.nearly_poised) break;
            }
        }
        if (!rep.mn_poised) {
            for (int mm = 1; mm <= 4 && !rep.mn_poised; ++mm) {
                for (int nn = 1; nn <= 4; ++nn) {
                    if (mm == 1 && nn == 1) continue;
                    if (std::gcd(mm, nn) != 1) continue;
                    if (max_matching(rest, S(mm) * a0 + S(nn), mm, nn) == r) {
                        rep.mn_poised = std::make_pair(mm, nn);
                        break;
                    }
                }
            }
        }
    }
    if (rep.well_poised) rep.nearly_poised = false;
    return rep;
}

}  // namespace hypx
