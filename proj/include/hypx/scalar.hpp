#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

#include "hypx/errors.hpp"

namespace hypx {

namespace mp = boost::multiprecision;

using Integer  = mp::number<mp::gmp_int, mp::et_off>;
/// Arbitrary-precision rational, kept canonical (positive denominator,
/// gcd-reduced) by GMP itself. The coefficient field for all exact work.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
/// Arbitrary-precision real with runtime-selectable precision.
using Real     = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Sets the working precision (in bits) for newly created Real values.
/// Must be >= 64.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

Real to_real(const Rational& q);

/// Parses "p/q" (q omitted when 1), e.g. "3", "-7/2". Throws DomainError on
/// malformed input, zero denominators, or decimal notation.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
/// True iff q is an integer <= 0.
bool is_nonpositive_integer(const Rational& q);

/// Complex value over Real. Together with Rational this is the second
/// scalar type the series machinery is instantiated with.
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(int v) : re(v) {}                      // NOLINT(google-explicit-constructor)
    Complex(Real r) : re(std::move(r)) {}          // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Rational& q) : re(to_real(q)) {}

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

Real abs(const Complex& z);
std::string to_string(const Complex& z, unsigned digits = 0);

/// Operations the series/polynomial templates need from a scalar type.
template <typename S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational from(const Rational& q) { return q; }
    static bool is_zero(const Rational& v) { return v == 0; }
    static bool is_one(const Rational& v) { return v == 1; }
    /// Exact comparison; the tolerance is ignored.
    static bool near(const Rational& a, const Rational& b, const Real&) { return a == b; }
    static std::string str(const Rational& v) { return to_string(v); }
};

template <>
struct ScalarOps<Complex> {
    static Complex from(const Rational& q) { return Complex(q); }
    static bool is_zero(const Complex& v) { return v.re == 0 && v.im == 0; }
    static bool is_one(const Complex& v) { return v.re == 1 && v.im == 0; }
    static bool near(const Complex& a, const Complex& b, const Real& tol) {
        return abs(a - b) < tol;
    }
    static std::string str(const Complex& v) { return to_string(v); }
};

}  // namespace hypx
