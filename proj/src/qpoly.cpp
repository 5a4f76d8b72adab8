#include "hypx/qpoly.hpp"

namespace hypx {

std::string to_string(QTag tag) {
    switch (tag) {
        case QTag::Q2: return "Q2";
        case QTag::Q3: return "Q3";
        case QTag::Q3p: return "Q3p";
    }
    return "?";
}

QTag parse_qtag(const std::string& name) {
    if (name == "Q2") return QTag::Q2;
    if (name == "Q3") return QTag::Q3;
    if (name == "Q3p") return QTag::Q3p;
    throw DomainError("unknown polynomial family: " + name);
}

RatPoly q_poly(const QFamily& f) {
    switch (f.tag) {
        case QTag::Q2:
            if (!f.c) throw DomainError("Q2 family requires parameter c");
            if (f.d) return q2_weight4(f.k, f.a, f.b, *f.c, *f.d);
            return q2_weight(f.k, f.a, f.b, *f.c);
        case QTag::Q3:
            return q3_weight(f.k, f.a, f.b, f.d);
        case QTag::Q3p:
            return q3p_weight(f.k, f.a, f.b, f.d);
    }
    throw DomainError("bad family tag");
}

QFamily shifted_predecessor(const QFamily& f) {
    if (f.k == 0) throw DomainError("no predecessor below k = 0");
    QFamily p = f;
    p.k = f.k - 1;
    p.a = f.a + 1;
    if (f.tag == QTag::Q2) {
        p.b = f.b + 1;
        if (p.c) *p.c += 1;
    }
    if (p.d) *p.d += 1;
    return p;
}

LiftingMap family_lifting(QTag tag) {
    switch (tag) {
        case QTag::Q2: return {1, 1, Rational(1)};
        case QTag::Q3: return {1, 2, Rational(1, 4)};
        case QTag::Q3p: return {2, 1, Rational(4)};
    }
    throw DomainError("bad family tag");
}

TransformArrays family_transform_arrays(const QFamily& f) {
    const Rational half(1, 2), quarter(1, 4), k = f.k;
    TransformArrays out;
    switch (f.tag) {
        case QTag::Q2:
            if (!f.c) throw DomainError("Q2 family requires parameter c");
            out.gamma = {f.b, *f.c};
            out.delta = {1 + f.a - f.b, 1 + f.a - *f.c};
            break;
        case QTag::Q3:
            out.gamma = {half - k - f.b, half - k + f.b};
            out.delta = {Rational(3, 4) + k / 2 + f.a / 2 + f.b / 2,
                         Rational(3, 4) + k / 2 + f.a / 2 - f.b / 2};
            break;
        case QTag::Q3p:
            out.gamma = {quarter - k / 2 + f.a / 2 - f.b / 2,
                         quarter - k / 2 + f.a / 2 + f.b / 2};
            out.delta = {half + k + f.a + f.b, half + k + f.a - f.b};
            break;
    }
    return out;
}

RatPoly master_raise(const QFamily& f, const RatPoly& q_prev) {
    if (f.k == 0) throw DomainError("master_raise requires k >= 1");
    if (f.tag == QTag::Q2 && !f.c) throw DomainError("Q2 family requires parameter c");
    const auto [l, m, x0] = family_lifting(f.tag);
    auto [gamma, delta] = family_transform_arrays(f);

    const auto n = RatPoly::variable();
    RatPoly term0 = q_prev * (n + RatPoly(f.a));
    for (const auto& g : gamma) term0 = term0 * (n + RatPoly(g));
    RatPoly term1 = q_prev.shift(Rational(-1)) * n;
    for (const auto& dl : delta) term1 = term1 * (n + RatPoly(dl - 1));

    if (f.d) {
        const Rational d = *f.d;
        detail::checked_factor(d, "d");
        term0 = term0 * ((n + RatPoly(Rational(l) * d)) / (Rational(l) * d));
        term1 = term1 * (-(n + RatPoly(f.a - Rational(m) * d)) / (Rational(l) * x0 * d));
    } else {
        term1 = term1 * (Rational(m) / (Rational(l) * x0));
    }

    const Rational la = f.a * Rational(l) / Rational(l + m);
    detail::checked_factor(la, "l*a/(l+m)");
    Rational const_coeff = f.a;
    for (const auto& g : gamma) const_coeff *= detail::checked_factor(g, "gamma factor");
    RatPoly divisor = (n + RatPoly(la)) * (const_coeff / la);
    return (term0 + term1).divide_exact(divisor, "master k-raising relation");
}

RatPoly lower_q2(const QFamily& f, const RatPoly& q_k) {
    if (f.tag != QTag::Q2 || f.d) throw DomainError("lowering is defined for the 3-parameter Q2 family");
    if (f.k == 0) throw DomainError("lowering requires k >= 1");
    if (!f.c) throw DomainError("Q2 family requires parameter c");
    const auto n = RatPoly::variable();
    RatPoly diff = (q_k.shift(Rational(1)) - q_k) * (f.b * *f.c);
    RatPoly dlambda = RatPoly(std::vector<Rational>{f.a + 1, Rational(2)});
    return diff.divide_exact(dlambda, "k-lowering relation");
}

RatPoly hat_q2(unsigned k, const Rational& a, const Rational& b, const Rational& c) {
    if (k == 0) return RatPoly::one();
    RatPoly prev = hat_q2(k - 1, a + 1, b + 1, c + 1);
    const auto n = RatPoly::variable();
    const Rational half(1, 2);
    RatPoly t0 = (n + RatPoly(Rational(k) + a / 2)) * (n + RatPoly(a)) * (n + RatPoly(b)) *
                 (n + RatPoly(c)) * (n + RatPoly(half + a / 2)) * prev;
    RatPoly t1 = (n + RatPoly(a / 2 - Rational(k))) * n * (n + RatPoly(a - b)) *
                 (n + RatPoly(a - c)) * (n + RatPoly(a / 2 - half)) * prev.shift(Rational(-1));
    Rational cc = detail::checked_factor(Rational(k) + a / 2, "(k + a/2)") *
                  detail::checked_factor(Rational(1) + a, "(1 + a)") *
                  detail::checked_factor(b, "b") * detail::checked_factor(c, "c");
    RatPoly divisor = (n + RatPoly(a / 2)) * cc;
    return (t0 + t1).divide_exact(divisor, "hat-Q k-raising relation");
}

namespace {

RatPoly bold_q3_impl(unsigned k, const Rational& a, const Rational& b) {
    const auto n = RatPoly::variable();
    const Rational half(1, 2), quarter(1, 4);
    if (k == 0) {
        detail::checked_factor(a, "a");
        return RatPoly::one() + n * (Rational(3) / a);
    }
    RatPoly prev = bold_q3_impl(k - 1, a + 1, b);
    const Rational kk = k;
    Rational two_k_a = detail::checked_factor(2 * kk + a, "(2k + a)");
    RatPoly t0 = (n * Rational(3) + RatPoly(2 * kk + a)) / two_k_a * (n + RatPoly(a)) *
                 (n + RatPoly(half - kk - b)) * (n + RatPoly(half - kk + b)) * prev;
    RatPoly t1 = (n * Rational(3) + RatPoly(a - 4 * kk)) * Rational(8) / two_k_a * n *
                 (n + RatPoly(kk / 2 + a / 2 + b / 2 - quarter)) *
                 (n + RatPoly(kk / 2 + a / 2 - b / 2 - quarter)) * prev.shift(Rational(-1));
    Rational cc = detail::checked_factor(a, "a") *
                  detail::checked_factor(half - kk - b, "(1/2 - k - b)") *
                  detail::checked_factor(half - kk + b, "(1/2 - k + b)");
    return (t0 + t1) / cc;
}

RatPoly bold_q3p_impl(unsigned k, const Rational& a, const Rational& b) {
    const auto n = RatPoly::variable();
    const Rational half(1, 2), quarter(1, 4);
    if (k == 0) {
        detail::checked_factor(a, "a");
        return RatPoly::one() + n * (Rational(3) / (2 * a));
    }
    RatPoly prev = bold_q3p_impl(k - 1, a + 1, b);
    const Rational kk = k;
    Rational two_k_a = detail::checked_factor(2 * kk + a, "(2k + a)");
    const Rational g1 = quarter - kk / 2 + a / 2 - b / 2;
    const Rational g2 = quarter - kk / 2 + a / 2 + b / 2;
    RatPoly t0 = (n * Rational(3) + RatPoly(4 * kk + 2 * a)) / two_k_a * (n + RatPoly(a)) *
                 (n + RatPoly(g1)) * (n + RatPoly(g2)) * prev;
    RatPoly t1 = (n * Rational(3) + RatPoly(2 * a - 2 * kk)) * Rational(1, 8) / two_k_a * n *
                 (n + RatPoly(kk + a + b - half)) * (n + RatPoly(kk + a - b - half)) *
                 prev.shift(Rational(-1));
    Rational cc = 2 * detail::checked_factor(a, "a") *
                  detail::checked_factor(g1, "(1/4 - k/2 + a/2 - b/2)") *
                  detail::checked_factor(g2, "(1/4 - k/2 + a/2 + b/2)");
    return (t0 + t1) / cc;
}

}  // namespace

RatPoly bold_q(const BoldQFamily& f) {
    if (f.a == 0 || f.a == Rational(-2) * Rational(f.k))
        throw DomainError("bold family requires a not in {0, -2k}");
    RatPoly result;
    switch (f.tag) {
        case QTag::Q2: {
            if (!f.c) throw DomainError("BQ2 family requires parameter c");
            const auto n = RatPoly::variable();
            result = (RatPoly::one() + n * (Rational(2) / f.a)) * hat_q2(f.k, f.a, f.b, *f.c);
            break;
        }
        case QTag::Q3:
            result = bold_q3_impl(f.k, f.a, f.b);
            break;
        case QTag::Q3p:
            result = bold_q3p_impl(f.k, f.a, f.b);
            break;
    }
    if (result.degree() != static_cast<int>(1 + 4 * f.k))
        throw InternalError("bold polynomial degree is not 1 + 4k");
    return result;
}

RatPoly hat_q2_special(unsigned k, const Rational& a, const Rational& b) {
    const Rational half(1, 2);
    const Rational c = half - Rational(k) + a / 2;
    // prefactor (n + 1/2 - k + a/2)_{2k} / (1/2 - k + a/2)_{2k}
    const auto n = RatPoly::variable();
    RatPoly pref = pochhammer(n + RatPoly(c), 2 * k);
    Rational pref_den = detail::checked_factor(pochhammer(c, 2 * k), "(1/2 - k + a/2)_{2k}");
    RatPoly sum;
    const auto neg_n = -n;
    const auto n_a = n + RatPoly(a);
    for (unsigned j = 0; j <= k; ++j) {
        Rational denom = pochhammer(Rational(1), j) *
                         detail::checked_factor(pochhammer(b, j), "(b)_j") *
                         detail::checked_factor(pochhammer(1 + a / 2, j), "(1 + a/2)_j");
        Rational coeff = pochhammer(Rational(-static_cast<int>(k)), j) / denom;
        sum = sum + pochhammer(neg_n, j) * pochhammer(n_a, j) * coeff;
    }
    RatPoly closed = pref * sum / pref_den;
    if (closed != hat_q2(k, a, b, c))
        throw InternalError("hat-Q special case disagrees with the recurrence route");
    // 2k of the negated roots are 1/2-k+a/2, ..., -1/2+k+a/2: the polynomial
    // is exactly divisible by prod_i (n + 1/2 - k + a/2 + i).
    closed.divide_exact(pref, "hat-Q special-case root run");
    return closed;
}

RatPoly p_poly(unsigned k, const Rational& A, const Rational& B) {
    const auto n = RatPoly::variable();
    RatPoly total;
    for (unsigned j = 0; j <= 2 * k + 1; ++j) {
        Rational coeff = pochhammer(Rational(-1 - 2 * static_cast<int>(k)), j) / factorial(j);
        total = total + pochhammer(n + RatPoly(B), j) *
                            pochhammer(n + RatPoly(A), 2 * k + 1 - j) * coeff;
    }
    if (total.degree() > static_cast<int>(k))
        throw InternalError("P_k degree exceeds k; cancellation failed");
    return total;
}

std::vector<RatPoly> q2_weight4_d_numerator(unsigned k, const Rational& a, const Rational& b,
                                            const Rational& c) {
    // sum_j t_j(n) * (e0 + d)_j * (d + j)_{k-j} as a polynomial in d, where
    // t_j(n) carries the d-free factors and e0 = k - 1 - a + b + c.
    const Rational e0 = Rational(k) - 1 - a + b + c;
    const auto n = RatPoly::variable();
    std::vector<RatPoly> out(k + 1, RatPoly());
    for (unsigned j = 0; j <= k; ++j) {
        Rational denom = pochhammer(Rational(1), j) *
                         detail::checked_factor(pochhammer(b, j), "(b)_j") *
                         detail::checked_factor(pochhammer(c, j), "(c)_j");
        RatPoly tj = pochhammer(-n, j) * pochhammer(n + RatPoly(a), j) *
                     (pochhammer(Rational(-static_cast<int>(k)), j) / denom);
        // (e0 + d)_j (d + j)_{k-j} expanded in d
        RatPoly dpoly = RatPoly::one();  // variable is d here
        const auto d = RatPoly::variable();
        for (unsigned i = 0; i < j; ++i) dpoly = dpoly * (d + RatPoly(e0 + Rational(i)));
        for (unsigned i = 0; i < k - j; ++i) dpoly = dpoly * (d + RatPoly(Rational(j + i)));
        for (size_t p = 0; p < dpoly.coefficients().size(); ++p)
            out[p] = out[p] + tj * dpoly.coefficients()[p];
    }
    return out;
}

}  // namespace hypx
