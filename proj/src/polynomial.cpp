#include "hypx/polynomial.hpp"

#include <sstream>

namespace hypx {

std::string to_display_string(const RatPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = p.degree(); e >= 0; --e) {
        Rational c = p.coefficient(static_cast<size_t>(e));
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational m = abs(c);
        bool need_coeff = (m != 1) || (e == 0);
        if (need_coeff) {
            if (denominator(m) == 1)
                os << numerator(m).str();
            else
                os << "(" << numerator(m).str() << "/" << denominator(m).str() << ")";
        }
        if (e > 0) {
            os << var;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace hypx
