#include "hypx/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace hypx {

namespace {
unsigned g_precision_bits = 256;

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 3;
}
}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 64) throw DomainError("precision_bits must be >= 64");
    g_precision_bits = bits;
    Real::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() { return g_precision_bits; }

Real to_real(const Rational& q) {
    return Real(numerator(q).str()) / Real(denominator(q).str());
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("empty rational literal");
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        throw DomainError("decimal input rejected; use exact p/q form: '" + text + "'");
    auto check_digits = [&](const std::string& part) {
        if (part.empty()) throw DomainError("malformed rational: '" + text + "'");
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw DomainError("malformed rational: '" + text + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw DomainError("malformed rational: '" + text + "'");
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_digits(s);
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_digits(num);
    check_digits(den);
    Integer d(den);
    if (d == 0) throw DomainError("zero denominator: '" + text + "'");
    return Rational(Integer(num)) / Rational(d);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && q <= 0; }

Real abs(const Complex& z) {
    using std::sqrt;
    return sqrt(z.re * z.re + z.im * z.im);
}

std::string to_string(const Complex& z, unsigned digits) {
    if (digits == 0) digits = 30;
    std::ostringstream os;
    os.precision(digits);
    if (z.im == 0) {
        os << z.re;
    } else {
        os << z.re << (z.im < 0 ? "-" : "+") << boost::multiprecision::abs(z.im) << "i";
    }
    return os.str();
}

}  // namespace hypx
