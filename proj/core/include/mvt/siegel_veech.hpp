#pragma once

#include "mvt/pi_poly.hpp"
#include "mvt/virasoro.hpp"

namespace mvt {

/// pi^2 * SV_{g,n} as a grade-0 (rational) PiPoly, for 2g-2+n >= 2:
///   SV * VOmega(0) = 1/4 ( VOmega_{g-1,n+2}(0)
///       + 1/2 sum_{g1+g2=g, n1+n2=n} n!/(n1! n2!) VOmega_{g1,1+n1}(0) VOmega_{g2,1+n2}(0) ),
/// unstable factors contributing zero. The n = 0 case reads VOmega_{g,0}
/// through the dilaton relation.
PiPoly sv_constant(Session& s, int g, int n);

/// SV_{g,n} * MV_{g,n} in the volume normalization: the cut-and-join sum over
/// MV volumes with combinatorial prefactors, including the continued value
/// 1/2 for the factorial ratio of a (0,3) factor. Equals
/// sv_constant / pi^2 * mv_volume.
PiPoly sv_times_mv(Session& s, int g, int n);

/// Truncated-series consistency of the generating-series form: both sides of
///   sum_{g,n} hbar^g x^n/n! * SV*VOmega(0) / pi^(6g-8+2n)
///     = 1/2 * hbar^2 d_x^2 sqrt(Z) / sqrt(Z)
/// through hbar^g_max and x^n_max, as exact rational coefficients.
bool sqrtz_consistency(Session& s, int g_max, int n_max);

}  // namespace mvt
