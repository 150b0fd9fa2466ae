#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvt/multi_index.hpp"
#include "mvt/pi_poly.hpp"

namespace mvt {

/// Symmetric even polynomial in n variables, stored on the basis
/// e_d(L) = L^(2d) / (2d+1)!: the value is
///   sum over tuples (d_1..d_n) of F[d_1..d_n] * prod_i e_{d_i}(L_i),
/// with F symmetric, so only the sorted exponent vector is kept.
class EvenPolynomial {
public:
    EvenPolynomial(int g, int n) : g_(g), n_(n) {}

    int g() const { return g_; }
    int n() const { return n_; }

    void set(std::vector<int> d, const PiPoly& value);
    const PiPoly& coeff(std::vector<int> d) const;
    const std::map<std::vector<int>, PiPoly>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Exact evaluation at boundary lengths given as PiPoly values.
    PiPoly evaluate(const std::vector<PiPoly>& lengths) const;
    PiPoly evaluate(const std::vector<Rational>& lengths) const;

    /// Extracts the coefficient of L_{n+1}^2 / 2, yielding the n-variable
    /// polynomial with coefficients F[d..., 1] / 3 (dilaton extraction).
    EvenPolynomial coefficient_of_half_Lsquared() const;

    bool operator==(const EvenPolynomial& o) const {
        return g_ == o.g_ && n_ == o.n_ && coeffs_ == o.coeffs_;
    }

    /// "d=[1,0]: 1/8 ; d=[0,0]: 1/12*pi^2" style listing, degree ascending.
    std::string str() const;

private:
    int g_;
    int n_;
    std::map<std::vector<int>, PiPoly> coeffs_;  // keys sorted descending
};

/// All distinct permutations of a sorted-descending exponent vector.
std::vector<std::vector<int>> distinct_permutations(std::vector<int> sorted_desc);

}  // namespace mvt
