#pragma once

#include <vector>

#include "mvt/coeff_table.hpp"
#include "mvt/even_polynomial.hpp"
#include "mvt/multi_index.hpp"
#include "mvt/pi_poly.hpp"

namespace mvt {

/// The coefficient recursion shared by the Kontsevich and Masur-Veech
/// theories. Both are instances of
///   F_{g,n}[d_1..d_n] = sum_{m>=2} sum_a B^{d_1}_{d_m,a} F_{g,n-1}[a, ...]
///     + 1/2 sum_{a,b} C^{d_1}_{a,b} ( F_{g-1,n+1}[a,b,...] + splittings ),
/// with kernels
///   B^i_{j,k} = (2j+1) delta_{i+j,k+1}                     (Kontsevich)
///   C^i_{j,k} = delta_{i,j+k+2}
/// and, for Masur-Veech, the zeta-twisted additions
///   B += delta_{i,0} delta_{j,0} zeta(2k+2)
///   C += (2j+2m+1)! zeta(2j+2m+2) / ((2j+1)! (2m)!) at m = k+1-i  (m >= 0)
///      + (same with j <-> k)
///      + delta_{i,0} zeta(2j+2) zeta(2k+2).
/// Base cases: F_{0,3} = delta_{d,0} for both; F_{1,1}[d] = delta_{d,1}/8
/// (Kontsevich) resp. delta_{d,0} zeta(2)/2 + delta_{d,1}/8 (Masur-Veech).
/// Unstable lookups F_{0,1}, F_{0,2} are identically zero inside the sums.
///
/// The recursion always reduces on the largest exponent (the canonical first
/// entry); the result is fully symmetric in the exponents, asserted in tests by
/// recursing on other entries.
class CoeffEngine {
public:
    explicit CoeffEngine(Theory t) : table_(t) {}

    Theory theory() const { return table_.theory(); }
    CoeffTable& table() { return table_; }
    const CoeffTable& table() const { return table_; }

    /// F_{g,n}[d] with memoization. Returns 0 for indices exceeding the
    /// dimension (and, in the Kontsevich theory, off-dimension indices).
    PiPoly coeff(const MultiIndex& idx);
    PiPoly coeff(int g, int n, std::vector<int> d) { return coeff(MultiIndex(g, n, std::move(d))); }

    /// Zero-extends d with trailing zeros to length n: the one-row values.
    PiPoly row_coeff(int g, int n, int d);

    /// Full coefficient family of V Omega_{g,n}.
    EvenPolynomial polynomial(int g, int n);

    /// Test hook: evaluates the recursion reducing on entry `pos` of the
    /// given (unsorted) exponent tuple instead of the largest one. Sub-calls
    /// go through the memoized canonical path.
    PiPoly coeff_reducing_on(int g, int n, const std::vector<int>& d, size_t pos);

private:
    /// Inner lookup: returns 0 for unstable (0,1), (0,2), negative genus or
    /// negative exponents instead of erroring.
    PiPoly lookup(int g, int n, std::vector<int> d);

    PiPoly compute(const MultiIndex& idx);
    PiPoly recursion_rhs(int g, int n, int d1, const std::vector<int>& rest);

    bool twisted() const { return table_.theory() == Theory::MasurVeech; }

    CoeffTable table_;
};

/// Session owning one engine per theory; everything downstream (graph sums,
/// Siegel-Veech constants, conjectures, CLI) works through one of these.
class Session {
public:
    Session() : kontsevich_(Theory::Kontsevich), masur_veech_(Theory::MasurVeech) {
        assert_normalization();
    }

    CoeffEngine& kontsevich() { return kontsevich_; }
    CoeffEngine& masur_veech() { return masur_veech_; }

    /// F^K_{g,n}[d] = prod (2d_i+1)!! <tau_{d_1}...tau_{d_n}>_g, rational.
    Rational kontsevich_coeff(const MultiIndex& idx);
    Rational kontsevich_coeff(int g, int n, std::vector<int> d) {
        return kontsevich_coeff(MultiIndex(g, n, std::move(d)));
    }

    /// psi-class intersection <tau_{d_1}...tau_{d_n}>_g; 0 off-dimension.
    Rational psi_intersection(int g, const std::vector<int>& d);

    /// F^MV_{g,n}[d].
    PiPoly mv_coeff(const MultiIndex& idx) { return masur_veech_.coeff(idx); }
    PiPoly mv_coeff(int g, int n, std::vector<int> d) { return masur_veech_.coeff(g, n, std::move(d)); }

    /// H_{g,n}[d] = F_{g,n}[d,0,...,0].
    PiPoly h_row(int g, int n, int d) { return masur_veech_.row_coeff(g, n, d); }

    /// V Omega^MV_{g,n} as an even polynomial (n >= 1).
    EvenPolynomial mv_polynomial(int g, int n) { return masur_veech_.polynomial(g, n); }

    /// Masur-Veech volume MV_{g,n}; n = 0 handled through F_{g,1}[1].
    /// MV_{0,3} = 4 by convention.
    PiPoly mv_volume(int g, int n);

    /// V Omega^MV_{g,n}(0,...,0), extended to n = 0 via the dilaton relation
    /// V Omega_{g,0} = F_{g,1}[1] / (3 (2g-2)).
    PiPoly mv_constant_term(int g, int n);

    /// One-row genus-zero fast path: H_n[d] by the specialized recursion that
    /// only touches one-row data. Agrees with mv_coeff(0,n,[d,0..0]).
    PiPoly h_row_genus0(int n, int d);

private:
    Rational h_row_genus0_rational(int n, int d);

    /// <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24 are pinned at construction.
    void assert_normalization();

    CoeffEngine kontsevich_;
    CoeffEngine masur_veech_;
    std::map<std::pair<int, int>, Rational> h0_memo_;
};

/// Twist weight u_{d1,d2} = (2d1+2d2+1)! zeta(2d1+2d2+2) / ((2d1+1)!(2d2+1)!),
/// supported on the single grade d1+d2+1.
PiPoly twist_weight(int d1, int d2);

}  // namespace mvt
