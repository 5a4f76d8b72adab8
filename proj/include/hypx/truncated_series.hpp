#pragma once

#include <optional>
#include <vector>

#include "hypx/errors.hpp"
#include "hypx/pochhammer.hpp"
#include "hypx/scalar.hpp"

namespace hypx {

/// Coefficients c_0..c_N of a formal power series truncated at order N.
template <typename S>
struct TruncatedSeries {
    std::vector<S> c;

    TruncatedSeries() = default;
    explicit TruncatedSeries(unsigned order) : c(order + 1, S(0)) {}
    explicit TruncatedSeries(std::vector<S> coeffs) : c(std::move(coeffs)) {}

    unsigned order() const { return static_cast<unsigned>(c.size()) - 1; }
    const S& operator[](size_t i) const { return c[i]; }
    S& operator[](size_t i) { return c[i]; }
};

template <typename S>
TruncatedSeries<S> ts_add(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    unsigned n = std::min(a.order(), b.order());
    TruncatedSeries<S> r(n);
    for (unsigned i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
}

template <typename S>
TruncatedSeries<S> ts_mul(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    unsigned n = std::min(a.order(), b.order());
    TruncatedSeries<S> r(n);
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= n - i; ++j) r[i + j] += a[i] * b[j];
    return r;
}

template <typename S>
TruncatedSeries<S> ts_scale(const TruncatedSeries<S>& a, const S& s) {
    TruncatedSeries<S> r = a;
    for (auto& v : r.c) v = v * s;
    return r;
}

/// outer(inner(x)); the inner series must have zero constant term.
template <typename S>
TruncatedSeries<S> ts_compose(const TruncatedSeries<S>& outer, const TruncatedSeries<S>& inner) {
    unsigned n = std::min(outer.order(), inner.order());
    if (!ScalarOps<S>::is_zero(inner[0]))
        throw DomainError("series composition requires a zero constant term in the inner series");
    TruncatedSeries<S> result(n);
    TruncatedSeries<S> power(n);
    power[0] = S(1);
    for (unsigned j = 0; j <= n; ++j) {
        if (j > 0) power = ts_mul(power, inner);
        for (unsigned i = j; i <= n; ++i) result[i] += outer[j] * power[i];
    }
    return result;
}

/// Binomial expansion of (1 + coeff*x)^exponent, exact for rational data.
template <typename S>
TruncatedSeries<S> power_prefactor_series(const S& coeff, const S& exponent, unsigned order) {
    TruncatedSeries<S> r(order);
    S term(1), cpow(1);
    r[0] = S(1);
    for (unsigned j = 1; j <= order; ++j) {
        term = term * (exponent - S(static_cast<int>(j) - 1)) / S(static_cast<int>(j));
        cpow = cpow * coeff;
        r[j] = term * cpow;
    }
    return r;
}

/// Index and both values at the first differing coefficient, if any.
template <typename S>
struct SeriesMismatch {
    unsigned index;
    S lhs, rhs;
};

template <typename S>
std::optional<SeriesMismatch<S>> first_mismatch(const TruncatedSeries<S>& a,
                                                const TruncatedSeries<S>& b,
                                                const Real& tol = Real(0)) {
    unsigned n = std::min(a.order(), b.order());
    for (unsigned i = 0; i <= n; ++i)
        if (!ScalarOps<S>::near(a[i], b[i], tol)) return SeriesMismatch<S>{i, a[i], b[i]};
    return std::nullopt;
}

}  // namespace hypx
