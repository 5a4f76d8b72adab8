#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypx/errors.hpp"
#include "hypx/scalar.hpp"

namespace hypx {

/// Dense univariate polynomial, constant term first. The leading coefficient
/// is nonzero unless the polynomial is the zero polynomial (empty form is
/// normalized to a single zero coefficient with degree() == -1).
template <typename S>
class Polynomial {
public:
    Polynomial() : coef_{S(0)} {}
    explicit Polynomial(S constant) : coef_{std::move(constant)} { trim(); }
    explicit Polynomial(std::vector<S> coeffs) : coef_(std::move(coeffs)) {
        if (coef_.empty()) coef_.push_back(S(0));
        trim();
    }

    static Polynomial one() { return Polynomial(S(1)); }
    /// The identity polynomial n.
    static Polynomial variable() { return Polynomial(std::vector<S>{S(0), S(1)}); }

    bool is_zero() const { return coef_.size() == 1 && ScalarOps<S>::is_zero(coef_[0]); }
    bool is_constant() const { return coef_.size() == 1; }
    int degree() const { return is_zero() ? -1 : static_cast<int>(coef_.size()) - 1; }

    const std::vector<S>& coefficients() const { return coef_; }
    S coefficient(size_t i) const { return i < coef_.size() ? coef_[i] : S(0); }
    const S& leading() const { return coef_.back(); }

    S operator()(const S& v) const {
        S acc = coef_.back();
        for (size_t i = coef_.size() - 1; i-- > 0;) acc = acc * v + coef_[i];
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> c(std::max(a.coef_.size(), b.coef_.size()), S(0));
        for (size_t i = 0; i < a.coef_.size(); ++i) c[i] = c[i] + a.coef_[i];
        for (size_t i = 0; i < b.coef_.size(); ++i) c[i] = c[i] + b.coef_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<S> c(a.coef_.size() + b.coef_.size() - 1, S(0));
        for (size_t i = 0; i < a.coef_.size(); ++i)
            for (size_t j = 0; j < b.coef_.size(); ++j)
                c[i + j] = c[i + j] + a.coef_[i] * b.coef_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const S& s) {
        Polynomial r = a;
        for (auto& c : r.coef_) c = c * s;
        r.trim();
        return r;
    }
    friend Polynomial operator*(const S& s, const Polynomial& a) { return a * s; }
    friend Polynomial operator/(const Polynomial& a, const S& s) {
        if (ScalarOps<S>::is_zero(s)) throw DomainError("polynomial division by zero scalar");
        Polynomial r = a;
        for (auto& c : r.coef_) c = c / s;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coef_ == b.coef_;
    }

    /// p(s*n + t).
    Polynomial compose_affine(const S& s, const S& t) const {
        Polynomial lin(std::vector<S>{t, s});
        Polynomial acc(coef_.back());
        for (size_t i = coef_.size() - 1; i-- > 0;) acc = acc * lin + Polynomial(coef_[i]);
        return acc;
    }
    /// p(n + t).
    Polynomial shift(const S& t) const { return compose_affine(S(1), t); }

    /// Euclidean division; requires S to be a field. Returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divide(const Polynomial& d) const {
        if (d.is_zero()) throw DomainError("polynomial division by zero polynomial");
        Polynomial q, r = *this;
        std::vector<S> qc(coef_.size(), S(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            S factor = r.leading() / d.leading();
            int pos = r.degree() - d.degree();
            qc[pos] = qc[pos] + factor;
            std::vector<S> sub(pos + d.coef_.size(), S(0));
            for (size_t i = 0; i < d.coef_.size(); ++i) sub[pos + i] = d.coef_[i] * factor;
            r = r - Polynomial(std::move(sub));
        }
        return {Polynomial(std::move(qc)), r};
    }

    /// Division that must be exact; a nonzero remainder is an internal error.
    Polynomial divide_exact(const Polynomial& d, const char* context) const {
        auto [q, r] = divide(d);
        if (!r.is_zero())
            throw InternalError(std::string(context) + ": polynomial division left a remainder");
        return q;
    }

private:
    void trim() {
        while (coef_.size() > 1 && ScalarOps<S>::is_zero(coef_.back())) coef_.pop_back();
    }

    std::vector<S> coef_;
};

using RatPoly = Polynomial<Rational>;
using CxPoly = Polynomial<Complex>;

/// Renders e.g. "(1/6)n^2 + (5/6)n + 1", highest power first.
std::string to_display_string(const RatPoly& p, const std::string& var = "n");

template <typename S>
Polynomial<S> convert_poly(const RatPoly& p) {
    std::vector<S> c;
    c.reserve(p.coefficients().size());
    for (const auto& q : p.coefficients()) c.push_back(ScalarOps<S>::from(q));
    return Polynomial<S>(std::move(c));
}

}  // namespace hypx
