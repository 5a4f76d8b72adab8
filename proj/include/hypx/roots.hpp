#pragma once

#include <vector>

#include "hypx/polynomial.hpp"
#include "hypx/scalar.hpp"

namespace hypx {

/// All deg(p) complex roots of p, counted with multiplicity, computed by
/// simultaneous iteration at elevated working precision. Each root z
/// satisfies |p(z)/lc(p)| < 2^(-precision_bits/2). For real-coefficient
/// input the result is closed under conjugation. Roots are sorted by
/// (real, imag). The zero polynomial is rejected; constants have no roots.
std::vector<Complex> poly_roots(const CxPoly& p, unsigned precision_bits);
std::vector<Complex> poly_roots(const RatPoly& p, unsigned precision_bits);

/// Negatives of poly_roots output (the xi_i values a weight polynomial
/// contributes as appended parameter pairs).
std::vector<Complex> negated_roots(const CxPoly& q, unsigned precision_bits);
std::vector<Complex> negated_roots(const RatPoly& q, unsigned precision_bits);

/// negated_roots plus the symmetry check that the root multiset is
/// invariant under xi -> a - xi (quadratic-lattice families are symmetric
/// about a/2). Throws InternalError when the symmetry fails.
std::vector<Complex> negated_roots_symmetric(const RatPoly& q, const Rational& a,
                                             unsigned precision_bits);

}  // namespace hypx
