#include "hypx/series.hpp"

namespace hypx {

unsigned termination_index(const WeightedSeries<Rational>& s) {
    std::optional<unsigned> best;
    for (const auto& u : s.upper) {
        if (is_nonpositive_integer(u)) {
            auto m = static_cast<unsigned>(-numerator(u));
            if (!best || m < *best) best = m;
        }
    }
    if (!best)
        throw DomainError("series does not terminate: no upper parameter is a nonpositive integer");
    return *best;
}

Rational terminating_sum(const WeightedSeries<Rational>& s) {
    unsigned m = termination_index(s);
    auto cs = series_coefficients(s, m);
    Rational total(0);
    for (const auto& c : cs.c) total += c;
    return total;
}

WeightedSeries<Complex> convert_series(const WeightedSeries<Rational>& s) {
    WeightedSeries<Complex> r;
    r.upper.reserve(s.upper.size());
    r.lower.reserve(s.lower.size());
    for (const auto& u : s.upper) r.upper.emplace_back(u);
    for (const auto& l : s.lower) r.lower.emplace_back(l);
    r.weight = convert_poly<Complex>(s.weight);
    r.scale = Complex(s.scale);
    r.normalization_exempt = s.normalization_exempt;
    return r;
}

namespace {

// Accelerated summation of sum_j (-1)^j a_j via Chebyshev-like weights;
// error decays like (3+sqrt(8))^-terms for smooth positive a_j.
Complex alternating_accel(const std::vector<Complex>& a, unsigned terms) {
    Real d = pow(Real(3) + sqrt(Real(8)), static_cast<int>(terms));
    d = (d + 1 / d) / 2;
    Real b(-1), c = -d;
    Complex sum(Real(0));
    for (unsigned j = 0; j < terms; ++j) {
        c = b - c;
        sum += Complex(c) * a[j];
        b = b * (Real(j) + terms) * (Real(j) - terms) /
            ((Real(j) + Real(1) / 2) * (Real(j) + 1));
    }
    return sum / Complex(d);
}

}  // namespace

Complex eval_numeric(const WeightedSeries<Complex>& s, const Complex& x, unsigned max_terms,
                     const Real& tail_tol) {
    Complex partial(Real(0));
    Complex core(Real(1));  // prod(upper)_n / ((1)_n prod(lower)_n) * (scale*x)^n
    unsigned small_run = 0;
    const bool neg_real_axis = (x.im == 0 && x.re < 0 && s.scale.im == 0);
    for (unsigned n = 0; n < max_terms; ++n) {
        Complex term = core * s.weight(Complex(static_cast<int>(n)));
        partial += term;
        if (abs(term) < tail_tol * (abs(partial) + 1)) {
            if (++small_run >= 3) return partial;
        } else {
            small_run = 0;
        }
        Complex num(Real(1));
        for (const auto& u : s.upper) num *= (u + Complex(static_cast<int>(n)));
        Complex den(Real(static_cast<int>(n) + 1));
        for (const auto& l : s.lower) den *= (l + Complex(static_cast<int>(n)));
        core = core * num / den * s.scale * x;
    }
    if (neg_real_axis) {
        // Alternating tail decaying too slowly for direct summation.
        Real digits = -log10(tail_tol);
        auto terms = static_cast<unsigned>(static_cast<double>(digits) * 1.4) + 12;
        std::vector<Complex> a;
        Complex c2(Real(1));
        for (unsigned n = 0; n < terms + 12; ++n) {
            Complex term = c2 * s.weight(Complex(static_cast<int>(n)));
            a.push_back((n % 2 == 0) ? term : -term);
            Complex num(Real(1));
            for (const auto& u : s.upper) num *= (u + Complex(static_cast<int>(n)));
            Complex den(Real(static_cast<int>(n) + 1));
            for (const auto& l : s.lower) den *= (l + Complex(static_cast<int>(n)));
            c2 = c2 * num / den * s.scale * x;
        }
        // The acceleration consumes a_j = (-1)^j term_j.
        Complex s1 = alternating_accel(a, terms);
        Complex s2 = alternating_accel(a, terms + 12);
        if (abs(s1 - s2) < 8 * tail_tol * (abs(s2) + 1)) return s2;
        throw ConvergenceError("eval_numeric: accelerated tail did not stabilize",
                               to_string(s2));
    }
    throw ConvergenceError("eval_numeric: tail bound not met within max_terms",
                           to_string(partial));
}

}  // namespace hypx
