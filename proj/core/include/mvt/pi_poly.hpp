#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mvt/rational.hpp"

namespace mvt {

/// Element of Q[pi^2]: a finite sum of terms r_k * pi^(2k) with exact rational
/// r_k. Every quantity in the Masur-Veech theory lives here; keeping the pi
/// power as a grade instead of a float keeps all results exact.
///
/// Canonical form: zero coefficients are never stored, so equality of the
/// underlying maps is equality of values.
class PiPoly {
public:
    PiPoly() = default;
    PiPoly(const Rational& r) { set(0, r); }
    PiPoly(long n) { set(0, Rational(n)); }

    /// r * pi^(2*grade)
    static PiPoly term(const Rational& r, int grade) {
        PiPoly p;
        p.set(grade, r);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    const Rational& coeff(int grade) const {
        static const Rational zero;
        auto it = coeffs_.find(grade);
        return it == coeffs_.end() ? zero : it->second;
    }

    /// When supported on one grade, returns (coefficient, grade).
    std::optional<std::pair<Rational, int>> single_grade() const {
        if (coeffs_.size() != 1) return std::nullopt;
        const auto& [g, r] = *coeffs_.begin();
        return std::make_pair(r, g);
    }

    const std::map<int, Rational>& terms() const { return coeffs_; }

    PiPoly operator-() const {
        PiPoly r;
        for (const auto& [g, c] : coeffs_) r.coeffs_.emplace(g, -c);
        return r;
    }
    PiPoly operator+(const PiPoly& o) const {
        PiPoly r = *this;
        for (const auto& [g, c] : o.coeffs_) r.add_term(g, c);
        return r;
    }
    PiPoly operator-(const PiPoly& o) const {
        PiPoly r = *this;
        for (const auto& [g, c] : o.coeffs_) r.add_term(g, -c);
        return r;
    }
    PiPoly operator*(const PiPoly& o) const {
        PiPoly r;
        for (const auto& [g1, c1] : coeffs_)
            for (const auto& [g2, c2] : o.coeffs_) r.add_term(g1 + g2, c1 * c2);
        return r;
    }
    PiPoly operator*(const Rational& s) const {
        PiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [g, c] : coeffs_) r.coeffs_.emplace(g, c * s);
        return r;
    }
    PiPoly operator/(const Rational& s) const {
        if (s.is_zero()) throw std::domain_error("division by zero");
        PiPoly r;
        for (const auto& [g, c] : coeffs_) r.coeffs_.emplace(g, c / s);
        return r;
    }

    /// Division valid only when the divisor is supported on a single grade.
    PiPoly operator/(const PiPoly& o) const {
        auto sg = o.single_grade();
        if (!sg) throw std::domain_error("PiPoly division requires single-grade divisor");
        PiPoly r;
        for (const auto& [g, c] : coeffs_) r.set(g - sg->second, c / sg->first);
        return r;
    }

    PiPoly& operator+=(const PiPoly& o) { return *this = *this + o; }
    PiPoly& operator-=(const PiPoly& o) { return *this = *this - o; }
    PiPoly& operator*=(const PiPoly& o) { return *this = *this * o; }

    bool operator==(const PiPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator<(const PiPoly& o) const { return coeffs_ < o.coeffs_; }

    /// Shift the whole polynomial by pi^(2k).
    PiPoly shifted(int k) const {
        PiPoly r;
        for (const auto& [g, c] : coeffs_) r.coeffs_.emplace(g + k, c);
        return r;
    }

    double to_double(double pi) const;

    /// Canonical text form: terms "p/q*pi^{2k}" joined by " + ", grades
    /// ascending; the grade-0 term renders as a bare rational. The separator
    /// around '*' is configurable so the CLI can print "2/3 * pi^2".
    std::string str(const std::string& times = "*") const;

private:
    void set(int grade, const Rational& r) {
        if (!r.is_zero()) coeffs_[grade] = r;
    }
    void add_term(int grade, const Rational& r) {
        if (r.is_zero()) return;
        auto it = coeffs_.find(grade);
        if (it == coeffs_.end()) {
            coeffs_.emplace(grade, r);
        } else {
            it->second += r;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    std::map<int, Rational> coeffs_;
};

inline PiPoly operator*(const Rational& s, const PiPoly& p) { return p * s; }

}  // namespace mvt
