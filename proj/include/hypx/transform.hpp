#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypx/lifting.hpp"
#include "hypx/qpoly.hpp"
#include "hypx/report.hpp"
#include "hypx/series.hpp"

namespace hypx {

/// One multiplicative factor (1 + linear_coeff * x)^exponent.
template <typename S>
struct Prefactor {
    S linear_coeff;
    S exponent;
};

/// A fully-specified instance of one transformation: lhs(t) evaluated at
/// t = lifting(x) equals the product of the prefactors with the rhs series.
template <typename S>
struct TransformIdentity {
    std::string name;
    LiftingMap lifting;
    unsigned k = 0;
    std::map<std::string, S> params;
    WeightedSeries<S> lhs;
    std::vector<Prefactor<S>> prefactors;
    WeightedSeries<S> rhs;
};

/// All registry identity names, in catalog order.
const std::vector<std::string>& transform_registry();
bool is_numeric_only(const std::string& name);

/// Builds a registry identity over exact rationals. Unknown names and
/// singular parameters are rejected. Numeric-only entries ("curious",
/// "linconstraint2") must go through build_identity_numeric.
TransformIdentity<Rational> build_identity(const std::string& name, unsigned k,
                                           const std::map<std::string, Rational>& params);

/// Numeric registry entries with irrational parameters. "curious" takes
/// theta as the rational multiple theta_over_pi of pi (default 1/6);
/// "linconstraint2" takes rational b and sign +-1.
TransformIdentity<Complex> build_identity_numeric(const std::string& name,
                                                  const std::map<std::string, Rational>& params);

/// The displayed merged form of "curious": a 4F3 in which the two
/// unit-separated pairs have collapsed into a single (2+xi, xi) pair.
WeightedSeries<Complex> curious_merged_form(const Rational& theta_over_pi);

/// Coefficient-by-coefficient comparison of both sides through x^order.
/// Exact mode demands identical rationals; numeric mode compares within
/// tol.
template <typename S>
VerificationReport verify_transform(const TransformIdentity<S>& id, unsigned order,
                                    const Real& tol = Real(0));

extern template VerificationReport verify_transform<Rational>(const TransformIdentity<Rational>&,
                                                              unsigned, const Real&);
extern template VerificationReport verify_transform<Complex>(const TransformIdentity<Complex>&,
                                                             unsigned, const Real&);

/// Series-level check of the k-raising mechanism: the rhs weighted series
/// with weight ((n + la/(l+m)) / (la/(l+m))) Q_k equals
/// (1 + (m/l)(x/x0)) times the series with weight Q_{k-1,+} at shifted
/// parameters.
VerificationReport verify_novelty(QTag family, unsigned k,
                                  const std::map<std::string, Rational>& params, unsigned order);

/// The double-summation lemma behind all registry identities, for arbitrary
/// (l, m, x0, a) and parameter arrays with l + m + |alpha| = |beta| + 1.
VerificationReport verify_key_lemma(int l, int m, const Rational& x0, const Rational& a,
                                    const std::vector<Rational>& alpha,
                                    const std::vector<Rational>& beta, unsigned order);

/// Testing aid: adds 1/7 to one stored entry of a built identity without
/// rebuilding the weight, producing a genuinely broken instance.
/// Site names: lhs-upper-<i>, lhs-lower-<i>, rhs-upper-<i>, rhs-lower-<i>,
/// prefactor-<i>, weight-<i>.
void mutate_identity(TransformIdentity<Rational>& id, const std::string& site);

}  // namespace hypx
