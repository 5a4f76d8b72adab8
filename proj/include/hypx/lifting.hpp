#pragma once

#include "hypx/scalar.hpp"
#include "hypx/truncated_series.hpp"

namespace hypx {

/// Rational substitution t = C_{l,m} (-x/x0)^l / (1 - x/x0)^{l+m} with
/// C_{l,m} = (l+m)^{l+m} / (l^l m^m). The registry identities use
/// (1,1;1), (1,2;1/4) and (2,1;4); arbitrary values are allowed for the
/// key-lemma checks.
struct LiftingMap {
    int l = 1;
    int m = 1;
    Rational x0 = Rational(1);
};

Rational lifting_prefactor(int l, int m);  // C_{l,m}

/// Exact expansion of the lifting map through x^order; the series has an
/// l-fold zero at x = 0.
template <typename S>
TruncatedSeries<S> lifting_series(const LiftingMap& map, unsigned order) {
    if (map.x0 == 0) throw DomainError("lifting map requires x0 != 0");
    if (map.l < 1 || map.m < 1) throw DomainError("lifting map requires l, m >= 1");
    const S inv_x0 = ScalarOps<S>::from(Rational(1) / map.x0);
    auto base = power_prefactor_series(-inv_x0, S(-(map.l + map.m)), order);
    S mono = ScalarOps<S>::from(lifting_prefactor(map.l, map.m));
    for (int i = 0; i < map.l; ++i) mono = mono * (-inv_x0);
    TruncatedSeries<S> out(order);
    for (unsigned n = static_cast<unsigned>(map.l); n <= order; ++n)
        out[n] = mono * base[n - static_cast<unsigned>(map.l)];
    return out;
}

}  // namespace hypx
