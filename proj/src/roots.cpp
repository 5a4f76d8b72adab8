#include "hypx/roots.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>

namespace hypx {

namespace {

Real eps_pow2(int neg_bits) {
    // 2^(-neg_bits)
    Real e(1);
    return ldexp(e, -neg_bits);
}

Complex horner(const std::vector<Complex>& monic, const Complex& z) {
    Complex acc = monic.back();
    for (size_t i = monic.size() - 1; i-- > 0;) acc = acc * z + monic[i];
    return acc;
}

struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned bits) : saved(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 3);
    }
    ~PrecisionGuard() { Real::default_precision(saved); }
};

}  // namespace

std::vector<Complex> poly_roots(const CxPoly& p, unsigned precision_bits) {
    if (p.is_zero()) throw DomainError("poly_roots: zero polynomial has no defined root set");
    const int deg = p.degree();
    if (deg == 0) return {};

    const unsigned work_bits = 2 * precision_bits + 64;
    PrecisionGuard guard(work_bits);

    // Re-round everything into the working precision, monic.
    std::vector<Complex> monic(deg + 1);
    Complex lead(Real(p.leading().re), Real(p.leading().im));
    for (int i = 0; i <= deg; ++i) {
        Complex ci(Real(p.coefficient(i).re), Real(p.coefficient(i).im));
        monic[i] = ci / lead;
    }

    // Cauchy-style starting circle, perturbed off any axis of symmetry.
    Real radius(1);
    for (int i = 0; i < deg; ++i) radius = (std::max)(radius, abs(monic[i]));
    radius += 1;
    const Real pi = boost::math::constants::pi<Real>();
    std::vector<Complex> z(deg);
    for (int j = 0; j < deg; ++j) {
        Real angle = 2 * pi * j / deg + Real(4) / 10;
        z[j] = Complex(radius * cos(angle), radius * sin(angle));
    }

    const Real tiny = eps_pow2(static_cast<int>(work_bits) - 8);
    for (int iter = 0; iter < 500; ++iter) {
        Real max_step(0);
        for (int j = 0; j < deg; ++j) {
            Complex denom(Real(1));
            for (int i = 0; i < deg; ++i)
                if (i != j) denom *= (z[j] - z[i]);
            Complex step = horner(monic, z[j]) / denom;
            z[j] -= step;
            max_step = (std::max)(max_step, abs(step));
        }
        if (max_step < tiny * (radius + 1)) break;
    }

    // Verify residuals at the accuracy contract.
    const Real residual_bound = eps_pow2(static_cast<int>(precision_bits) / 2);
    for (auto& r : z)
        if (abs(horner(monic, r)) >= residual_bound)
            throw InternalError("poly_roots: iteration did not reach the residual bound");

    // Snap near-real roots and restore conjugate pairing for real input.
    bool real_input = true;
    for (const auto& c : monic)
        if (c.im != 0) real_input = false;
    if (real_input) {
        const Real snap = eps_pow2(static_cast<int>(precision_bits) / 2);
        std::vector<bool> used(deg, false);
        for (int j = 0; j < deg; ++j) {
            if (abs(Complex(Real(0), z[j].im)) < snap * (abs(z[j]) + 1)) {
                z[j].im = 0;
                used[j] = true;
            }
        }
        for (int j = 0; j < deg; ++j) {
            if (used[j]) continue;
            int best = -1;
            Real best_dist(0);
            for (int i = j + 1; i < deg; ++i) {
                if (used[i]) continue;
                Real dist = abs(z[i] - Complex(z[j].re, -z[j].im));
                if (best < 0 || dist < best_dist) {
                    best = i;
                    best_dist = dist;
                }
            }
            if (best >= 0) {
                Complex avg((z[j].re + z[best].re) / 2, (z[j].im - z[best].im) / 2);
                z[j] = avg;
                z[best] = Complex(avg.re, -avg.im);
                used[j] = used[best] = true;
            }
        }
    }

    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return z;
}

std::vector<Complex> poly_roots(const RatPoly& p, unsigned precision_bits) {
    return poly_roots(convert_poly<Complex>(p), precision_bits);
}

std::vector<Complex> negated_roots(const CxPoly& q, unsigned precision_bits) {
    auto roots = poly_roots(q, precision_bits);
    for (auto& r : roots) r = -r;
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return roots;
}

std::vector<Complex> negated_roots(const RatPoly& q, unsigned precision_bits) {
    return negated_roots(convert_poly<Complex>(q), precision_bits);
}

std::vector<Complex> negated_roots_symmetric(const RatPoly& q, const Rational& a,
                                             unsigned precision_bits) {
    auto xs = negated_roots(q, precision_bits);
    const Real tol = eps_pow2(static_cast<int>(precision_bits) / 4);
    const Complex center(to_real(a));
    std::vector<bool> used(xs.size(), false);
    for (size_t i = 0; i < xs.size(); ++i) {
        if (used[i]) continue;
        Complex mirror = center - xs[i];
        bool found = false;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (used[j] && j != i) continue;
            if (abs(xs[j] - mirror) < tol * (abs(mirror) + 1)) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            throw InternalError("negated_roots: root multiset is not symmetric about a/2");
    }
    return xs;
}

}  // namespace hypx
