#pragma once

#include <vector>

#include "mvt/rational.hpp"

namespace mvt {

/// Closed formula for the genus-one psi-class intersection
/// <tau_{a_1}...tau_{a_n}>_1 with sum a_i = n:
///   1/24 ( multinomial(n; a) -
///          sum over b in {0,1}^n of
///            multinomial(n - |b|; a - b) * (|b| - 2)! ),
/// where summands with any negative factorial argument are dropped
/// (so only |b| >= 2 and a_i >= b_i contribute). Returns 0 when sum a != n.
Rational genus_one_closed(const std::vector<int>& a);

/// Sum of all genus-one intersections with n insertions:
///   1/24 ( n^n - sum_{k=1}^{n-1} n^(n-k) / (k(k+1)) * (n-1)!/(n-k-1)! ).
Rational genus_one_total(int n);

}  // namespace mvt
