#include "mvt/pi_poly.hpp"

#include <cmath>
#include <sstream>

namespace mvt {

double PiPoly::to_double(double pi) const {
    double acc = 0.0;
    for (const auto& [g, c] : coeffs_) acc += c.to_double() * std::pow(pi, 2 * g);
    return acc;
}

std::string PiPoly::str(const std::string& times) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : coeffs_) {
        Rational a = c;
        if (first) {
            if (a.is_negative()) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.is_negative() ? " - " : " + ");
            if (a.is_negative()) a = -a;
        }
        first = false;
        if (g == 0) {
            out << a.str();
        } else {
            out << a.str() << times << "pi^" << 2 * g;
        }
    }
    return out.str();
}

}  // namespace mvt
