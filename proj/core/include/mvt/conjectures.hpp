#pragma once

#include <string>
#include <vector>

#include "mvt/pi_poly.hpp"
#include "mvt/virasoro.hpp"

namespace mvt {

/// Fixed-genus closed form for the Masur-Veech volume,
///   MV_{g,n} / pi^(6g-6+2n)
///     = 2^n (2g-3+n)! (4g-4+n)! / (6g-7+2n)! (p_g(n) + gamma_{2g-3+n} q_g(n)),
/// with the published coefficient tables for g <= 6. The (0,3) case uses the
/// limit value 2 of the factorial ratio, recovering the conventional 4.
PiPoly conjectured_mv(int g, int n);

/// Fixed-genus closed form for pi^2 SV_{g,n} (g <= 6, 2g-2+n >= 2):
///   ( p*_g(n)/(2g-3+n) + gamma_{2g-3+n} q*_g(n) ) / ( p_g(n) + gamma q_g(n) ).
PiPoly conjectured_sv(int g, int n);

struct FitReport {
    int d = 0;
    std::vector<Rational> fitted;          // polynomial coefficients, ascending
    std::vector<int> test_n;               // probed n values
    std::vector<bool> test_exact;          // exact reproduction of H_n[d]?
    bool all_exact = false;
    bool matches_published = false;        // fitted == embedded P_d table?
    std::string note;
};

/// Fits the degree-d polynomial P in the structural shape
///   H_n[d] = (2d+1)/(2d-1)!! * 4^-(n-3-d) * (2(n-3-d))!/(n-3-d)! * P(n) * pi^(2(n-3-d))
/// through the exact one-row values on `fit_n` (needs exactly d+1 points),
/// then checks exact extrapolation on `test_n` and reports -- without failing
/// -- whether the fitted polynomial agrees with the published table entry.
FitReport fit_genus0_row_ansatz(Session& s, int d, const std::vector<int>& fit_n,
                                const std::vector<int>& test_n);

struct Genus1Value {
    PiPoly value;
    bool exception_branch = false;  // n = d closed form used instead
};

/// Genus-one one-row ansatz (n >= d, d <= 5):
///   H_{1,n}[d] = 2^(d-2) ( (n-1)! rho_d + (n-1-d)! gamma_{n-1-d} R_d(n) ) pi^(2(n-d)),
/// which is known to fail at n = d, where the closed value
/// (1/24)(2n+1)!/(2^n n!) is returned and flagged.
Genus1Value genus1_row_ansatz(int n, int d);

struct SeriesCheckLine {
    int n = 0;
    Rational expected;  // from the exact recursion
    Rational got;       // from the generating series
    bool ok = false;
};

struct SeriesCheckReport {
    std::vector<SeriesCheckLine> lines;
    bool top_coefficient_ok = false;  // top of Q_g vs 2^(3-2g)(4g-7)!! b_g
    bool all_ok = false;
};

/// Expands -ln(y)/12 delta_{g,1} + y^(5(1-g)) Q_g(y), y = sqrt(1-x), through
/// x^n_max and compares n! [x^n] with H_{g,n}[0]/pi^(6g-6+2n). For g = 0 the
/// comparison starts at n = 3 (the conventional quadratic correction covers
/// lower orders); for g >= 2 the x^0 coefficient is matched against the
/// closed-surface constant V Omega_{g,0}(0)/pi^(6g-6).
SeriesCheckReport generating_series_check(Session& s, int g, int n_max);

struct AsymptoticConstants {
    Rational m;  // MV_{g,n} ~ 2^-n pi^(6g-6+2n+eps/2) n^(g/2) m_g
    Rational s;  // pi^2 SV_{g,n} = (n+5-5g)/6 + s_g pi^(1-eps) n^(-1/2) + O(1/n)
    bool structure_ok = false;  // leading terms of the expansion as stated
};

/// Derives (m_g, s_g) from the fixed-genus tables: m_g from the top
/// coefficient of q_g (g even) or p_g (g odd) via 2^(6g-7) m_g = top, and
/// s_g from the exact asymptotic expansion of the conjectured pi^2 SV_{g,n}
/// in powers of n^(-1/2).
AsymptoticConstants asymptotic_constants(int g);

/// Embedded published table rows (used by the fit comparison and tests).
const std::vector<Rational>& published_genus0_row_polynomial(int d);  // P_d, d <= 5
Rational published_m_constant(int g);                                 // m_g, g <= 6
Rational published_s_constant(int g);                                 // s_g, g <= 6

}  // namespace mvt
