#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypx/lifting.hpp"
#include "hypx/pochhammer.hpp"
#include "hypx/polynomial.hpp"
#include "hypx/scalar.hpp"

namespace hypx {

enum class QTag { Q2, Q3, Q3p };

std::string to_string(QTag tag);
QTag parse_qtag(const std::string& name);

namespace detail {
template <typename S>
S checked_factor(const S& value, const std::string& what) {
    if constexpr (std::is_same_v<S, Rational>) {
        if (value == 0) throw DomainError("singular parameters: factor " + what + " vanishes");
    }
    return value;
}
}  // namespace detail

/// Degree-2k weight with parameters (a; b, c): terminating sum over j of
/// (-n)_j (n+a)_j (-k)_j / ((1)_j (b)_j (c)_j), assembled exactly in n.
template <typename S>
Polynomial<S> q2_weight(unsigned k, const S& a, const S& b, const S& c) {
    Polynomial<S> total;
    const auto neg_n = -Polynomial<S>::variable();
    const auto n_a = Polynomial<S>::variable() + Polynomial<S>(a);
    for (unsigned j = 0; j <= k; ++j) {
        S denom = pochhammer(S(1), j) * detail::checked_factor(pochhammer(b, j), "(b)_j") *
                  detail::checked_factor(pochhammer(c, j), "(c)_j");
        S coeff = pochhammer(S(-static_cast<int>(k)), j) / denom;
        total = total + pochhammer(neg_n, j) * pochhammer(n_a, j) * coeff;
    }
    return total;
}

/// Four-parameter variant of q2_weight, degree 2k, extra pair driven by d.
template <typename S>
Polynomial<S> q2_weight4(unsigned k, const S& a, const S& b, const S& c, const S& d) {
    Polynomial<S> total;
    const auto neg_n = -Polynomial<S>::variable();
    const auto n_a = Polynomial<S>::variable() + Polynomial<S>(a);
    const S e = S(static_cast<int>(k)) - S(1) - a + b + c + d;
    for (unsigned j = 0; j <= k; ++j) {
        S denom = pochhammer(S(1), j) * detail::checked_factor(pochhammer(b, j), "(b)_j") *
                  detail::checked_factor(pochhammer(c, j), "(c)_j") *
                  detail::checked_factor(pochhammer(d, j), "(d)_j");
        S coeff = pochhammer(S(-static_cast<int>(k)), j) * pochhammer(e, j) / denom;
        total = total + pochhammer(neg_n, j) * pochhammer(n_a, j) * coeff;
    }
    return total;
}

/// First-cubic weight (a; b), degree 2k, or the d-extended degree-3k form.
/// The n-dependent lower parameters are cleared against the Pochhammer
/// prefactor, so the result is an exact polynomial.
template <typename S>
Polynomial<S> q3_weight(unsigned k, const S& a, const S& b, std::optional<S> d = {}) {
    const S half = S(1) / S(2);
    const S quarter = S(1) / S(4);
    const auto n = Polynomial<S>::variable();
    const S kk = S(static_cast<int>(k));
    // beta1(n) = 1/4 - k/2 + b/2 - n/2, beta2(n) with b negated
    auto beta1 = Polynomial<S>(quarter - kk / S(2) + b / S(2)) - n / S(2);
    auto beta2 = Polynomial<S>(quarter - kk / S(2) - b / S(2)) - n / S(2);
    S denom = detail::checked_factor(pochhammer(half + b, k), "(1/2+b)_k") *
              detail::checked_factor(pochhammer(half - b, k), "(1/2-b)_k");
    S pref(1);  // 4^k / denom
    for (unsigned i = 0; i < k; ++i) pref = pref * S(4);
    pref = pref / denom;
    Polynomial<S> total;
    const auto neg_n = -n;
    const auto half_n_a = n / S(2) + Polynomial<S>(a / S(2));
    for (unsigned j = 0; j <= k; ++j) {
        S coeff = pochhammer(S(-static_cast<int>(k)), j) / pochhammer(S(1), j);
        auto term = pochhammer(neg_n, j) * pochhammer(half_n_a, j) * coeff;
        term = term * pochhammer(beta1 + Polynomial<S>(S(static_cast<int>(j))), k - j) *
               pochhammer(beta2 + Polynomial<S>(S(static_cast<int>(j))), k - j);
        if (d) {
            // extra upper -n/2 - a/2 - 1/2 + d over lower d
            auto extra = -n / S(2) + Polynomial<S>(*d - a / S(2) - half);
            term = term * pochhammer(extra, j) /
                   detail::checked_factor(pochhammer(*d, j), "(d)_j");
        }
        total = total + term;
    }
    return total * pref;
}

/// Second-cubic weight (a; b), degree 2k, or the d-extended degree-3k form.
template <typename S>
Polynomial<S> q3p_weight(unsigned k, const S& a, const S& b, std::optional<S> d = {}) {
    const S half = S(1) / S(2);
    const auto n = Polynomial<S>::variable();
    const S kk = S(static_cast<int>(k));
    const S c1 = S(3) / S(4) - kk / S(2) - a / S(2) + b / S(2);
    const S c2 = S(3) / S(4) - kk / S(2) - a / S(2) - b / S(2);
    auto g1 = Polynomial<S>(c1) - n;
    auto g2 = Polynomial<S>(c2) - n;
    S denom = detail::checked_factor(pochhammer(c1, k), "(3/4-k/2-a/2+b/2)_k") *
              detail::checked_factor(pochhammer(c2, k), "(3/4-k/2-a/2-b/2)_k");
    Polynomial<S> total;
    for (unsigned j = 0; j <= k; ++j) {
        S coeff = pochhammer(S(-static_cast<int>(k)), j) / pochhammer(S(1), j);
        auto term = pochhammer(-n / S(2), j) * pochhammer(-n / S(2) + Polynomial<S>(half), j) * coeff;
        term = term * pochhammer(g1 + Polynomial<S>(S(static_cast<int>(j))), k - j) *
               pochhammer(g2 + Polynomial<S>(S(static_cast<int>(j))), k - j);
        if (d) {
            auto extra = -n + Polynomial<S>(*d - a);
            term = term * pochhammer(extra, j) /
                   detail::checked_factor(pochhammer(*d, j), "(d)_j");
        }
        total = total + term;
    }
    return total / denom;
}

/// One of the six plain polynomial families: tag selects the lifting shape,
/// (a; b[, c][, d]) the parameters, k the extension level.
struct QFamily {
    QTag tag;
    unsigned k = 0;
    Rational a;
    Rational b;
    std::optional<Rational> c;  // Q2 families only
    std::optional<Rational> d;  // four-parameter variants
};

/// Exact polynomial by direct expansion of the terminating representation.
RatPoly q_poly(const QFamily& f);

/// The family at (k-1) with the raising shifts applied: a+1 always, b+1 and
/// c+1 for Q2, d+1 whenever d is present.
QFamily shifted_predecessor(const QFamily& f);

/// Lifting shape the family's transformation uses.
LiftingMap family_lifting(QTag tag);

/// Upper (gamma) and lower (delta) parameter arrays, beyond the leading a,
/// of the transformation's right-hand series for this family at level k.
struct TransformArrays {
    std::vector<Rational> gamma, delta;
};
TransformArrays family_transform_arrays(const QFamily& f);

/// Rebuilds Q_k from Q_{k-1,+} through the master k-raising relation; the
/// polynomial division it entails must be exact.
RatPoly master_raise(const QFamily& f, const RatPoly& q_prev);

/// k-lowering for the three-parameter Q2 family:
/// bc * (Q_k(n+1) - Q_k(n)) / (2n + a + 1), an exact division. Equals
/// k * Q_{k-1,+}.
RatPoly lower_q2(const QFamily& f, const RatPoly& q_k);

struct BoldQFamily {
    QTag tag;
    unsigned k = 0;
    Rational a;
    Rational b;
    std::optional<Rational> c;  // BQ2 only
};

/// Degree-(1+4k) polynomial built by iterating the k-raising relation from
/// the k = 0 seed (1 + 2n/a for BQ2 via the hat factorization, 1 + 3n/a and
/// 1 + 3n/(2a) for the cubics).
RatPoly bold_q(const BoldQFamily& f);

/// Even-degree factor of the BQ2 polynomial: bold Q = (1 + 2n/a) * hat Q.
RatPoly hat_q2(unsigned k, const Rational& a, const Rational& b, const Rational& c);

/// Closed form of hat Q at c = 1/2 - k + a/2, cross-checked against the
/// recurrence route, including the guaranteed run of 2k integer-spaced
/// negated roots starting at 1/2 - k + a/2.
RatPoly hat_q2_special(unsigned k, const Rational& a, const Rational& b);

/// Degree-k antisymmetric polynomial P_k(n; A, B) built from a terminating
/// 2k+2 term sum with the polynomial-valued lower parameter cleared.
RatPoly p_poly(unsigned k, const Rational& A, const Rational& B);

/// Numerator of the four-parameter q2 weight as a polynomial in d:
/// q2_weight4 = (sum_i coeff[i] * d^i) / (d)_k. The top coefficient is the
/// three-parameter weight, which is the d -> infinity statement.
std::vector<RatPoly> q2_weight4_d_numerator(unsigned k, const Rational& a, const Rational& b,
                                            const Rational& c);

}  // namespace hypx
