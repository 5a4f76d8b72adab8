#pragma once

#include "hypx/polynomial.hpp"
#include "hypx/scalar.hpp"

namespace hypx {

/// Rising factorial (c)(c+1)...(c+n-1), with (c)_0 = 1.
template <typename S>
S pochhammer(const S& c, unsigned n) {
    S r(1);
    for (unsigned i = 0; i < n; ++i) r = r * (c + S(static_cast<int>(i)));
    return r;
}

/// Rising factorial of a polynomial argument: prod_{i<n} (p + i).
template <typename S>
Polynomial<S> pochhammer(const Polynomial<S>& p, unsigned n) {
    Polynomial<S> r = Polynomial<S>::one();
    for (unsigned i = 0; i < n; ++i) r = r * (p + Polynomial<S>(S(static_cast<int>(i))));
    return r;
}

inline Rational factorial(unsigned n) { return pochhammer(Rational(1), n); }

}  // namespace hypx
