#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvt/rational.hpp"
#include "mvt/virasoro.hpp"

namespace mvt {

/// Truncated power series in q with exact rational coefficients c_0..c_N.
class QSeries {
public:
    explicit QSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {}

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    Rational& coeff(int k) { return coeffs_[static_cast<size_t>(k)]; }

    QSeries operator+(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries operator*(const Rational& r) const;

    bool operator==(const QSeries& o) const { return coeffs_ == o.coeffs_; }

    /// "c0 + c1*q + ... + cN*q^N" with exact rationals, zero terms skipped.
    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

/// Lattice point count P_{g,n}(L_1..L_n) of the combinatorial moduli space,
/// by the discrete topological recursion with Kontsevich kernels restricted
/// to positive integers of admissible parity. Zero for odd total length.
/// Pointwise memoized; values are rational (orbifold points carry weights).
class NorburyCounter {
public:
    Rational count(int g, int n, std::vector<long> lengths);

private:
    Rational compute(int g, int n, const std::vector<long>& sorted);
    std::map<std::tuple<int, int, std::vector<long>>, Rational> memo_;
};

/// Interpolated form of the lattice count: one polynomial in L_1..L_n per
/// parity class (pattern of odd entries with even weight), each of total
/// degree <= 3g-3+n in the squared lengths. An accelerator over the
/// pointwise recursion; fitting samples the recursion on a grid and the
/// result is validated against further pointwise values in the tests.
class QuasiPolynomial {
public:
    /// Exponent vectors in the L_i^2 variables -> coefficient.
    using Poly = std::map<std::vector<int>, Rational>;

    static QuasiPolynomial fit(NorburyCounter& counter, int g, int n);

    int g() const { return g_; }
    int n() const { return n_; }

    /// Pointwise value; 0 on odd total length.
    Rational evaluate(const std::vector<long>& lengths) const;

    /// Polynomial attached to one parity pattern (entries 0/1, even weight).
    const Poly& class_polynomial(const std::vector<int>& parity) const;

    /// Terms of top total degree 3g-3+n of one class polynomial.
    Poly top_degree_part(const std::vector<int>& parity) const;

private:
    int g_ = 0, n_ = 0;
    std::map<std::vector<int>, Poly> classes_;
};

/// q-series counting square-tiled surfaces with boundary lengths L by core
/// area, truncated at q^N: the stable-graph sum with edge factor
/// l q^l / (1 - q^l) and Norbury vertex weights.
QSeries sts_series(NorburyCounter& counter, int g, int n, const std::vector<long>& lengths, int order);

struct AsymptoticDiagnostic {
    double scaled_value = 0;   // P(TL) / T^(6g-6+2n)  (or its q-analog)
    double target = 0;         // 2^-(2g-3+n) VOmega(L), float-evaluated
    double deviation = 0;      // |scaled - target|
    Rational exact_difference; // exact, only for the lattice-count check
};

/// Compares P_{g,n}(T L) / T^(6g-6+2n) with 2^-(2g-3+n) VOmega^K_{g,n}(L),
/// exactly and as floats. T must be even and positive.
AsymptoticDiagnostic norbury_asymptotic_check(Session& s, NorburyCounter& counter, int g, int n,
                                              const std::vector<long>& lengths, long T);

/// Compares T^-(6g-6+2n) P^{box,q=e^(-1/T)}_{g,n}(T L) with
/// 2^-(2g-3+n) VOmega^MV_{g,n}(L), in floating point (edge sums evaluated
/// with a small tail cutoff). T must be even and positive.
AsymptoticDiagnostic mv_scaling_check(Session& s, NorburyCounter& counter, int g, int n,
                                      const std::vector<long>& lengths, long T);

}  // namespace mvt
