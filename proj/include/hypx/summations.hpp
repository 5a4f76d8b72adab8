#pragma once

#include <optional>

#include "hypx/report.hpp"
#include "hypx/transform.hpp"

namespace hypx {

/// Terminating 3F2(1) transformation: lhs with upper (-n, A, B) over
/// (D, E) against the Pochhammer-ratio form with excess S = n-A-B+D+E.
VerificationReport verify_sheppard(unsigned n, const Rational& A, const Rational& B,
                                   const Rational& D, const Rational& E);

/// 1-balanced terminating 4F3(1) transformation; the excess
/// n-A-B-C+D+E+F = 1 is a precondition.
VerificationReport verify_whipple43(unsigned n, const Rational& A, const Rational& B,
                                    const Rational& C, const Rational& D, const Rational& E,
                                    const Rational& F);

enum class RForm { R2, R3 };

/// Agreement of the two displayed expressions for the per-index weights
/// R(n) of the proofs section; an instance of verify_sheppard combined with
/// a Pochhammer prefactor identity (checked separately for R3).
VerificationReport verify_r_forms(RForm family, unsigned n, unsigned k, const Rational& a,
                                  const Rational& b, const Rational& c);

/// Residue-composition pairing: [x^N] of the product of the two rhs series
/// equals (-C_{1,m}/x0)^N [t^N] of the product of the two lhs functions.
/// base must be an l = 1 identity with a single (1 - x/x0)^alpha prefactor;
/// companion must carry the (1 + m x/x0)^-1 factor (its k = 0 case).
VerificationReport verify_gs_pairing(int m, const Rational& x0,
                                     const TransformIdentity<Rational>& base,
                                     const TransformIdentity<Rational>& companion, unsigned N);

/// Extended very-well-poised 7F6(1)-style summation with weight
/// R_k(n) = Q(N-n)/Q(N). Variant ii adds the parameter f and a fourth
/// weight argument.
VerificationReport verify_ext_whipple(const std::string& variant, unsigned k, unsigned N,
                                      const Rational& a, const Rational& b, const Rational& c,
                                      const Rational& d, const Rational& e,
                                      std::optional<Rational> f = {});

/// Structural f -> infinity reduction of variant ii to variant i: degree
/// and leading-coefficient agreement of every f-dependent factor, plus the
/// top d-coefficient identity for the four-parameter weight.
bool ext_whipple_f_limit_structural(unsigned k, unsigned N, const Rational& a, const Rational& d,
                                    const Rational& e);

/// Nearly-poised summation: terminating 5F4(1) (variant i) or 6F5(1) with
/// the extra (k+d, d) pair (variant ii) against the weighted sum with the
/// quadratic-family weight.
VerificationReport verify_bailey1(const std::string& variant, unsigned k, unsigned m,
                                  const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& w, std::optional<Rational> d = {});

/// The P_k-weighted companion summation with the bold quadratic weight on
/// the right.
VerificationReport verify_bailey2(unsigned k, unsigned m, const Rational& a, const Rational& b,
                                  const Rational& c, const Rational& w);

/// Well-poised evaluation at x = -1: numeric left side against the exact
/// gamma-ratio right side, reduced to rationals for even integer a >= 0.
/// Tolerance is 10^-(precision_bits/10).
VerificationReport verify_kummer_ext(unsigned k, const Rational& a, const Rational& b,
                                     unsigned precision_bits);

/// Exact rational right side of the x = -1 evaluation (even integer a >= 0).
Rational kummer_ext_rhs(unsigned k, const Rational& a, const Rational& b);

}  // namespace hypx
