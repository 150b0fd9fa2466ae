#pragma once

#include <vector>

#include "mvt/even_polynomial.hpp"
#include "mvt/stable_graph.hpp"
#include "mvt/virasoro.hpp"

namespace mvt {

/// F^MV_{g,n}[d] evaluated through the decorated stable-graph sum
///   sum_Gamma 1/|Aut| sum_{decorations} prod_edges u_{d,d'} prod_vertices F^K,
/// with the i-th leaf decorated by d_i and every vertex meeting its dimension
/// exactly. Independent of the Virasoro path except for the Kontsevich vertex
/// weights. `max_edges < 0` means no restriction.
PiPoly mv_coeff_via_graphs(Session& s, int g, int n, const std::vector<int>& d, int max_edges = -1);

/// Same sum restricted to one supplied graph list (avoids re-enumeration).
PiPoly mv_coeff_via_graphs(Session& s, const std::vector<StableGraph>& graphs,
                           const std::vector<int>& d, int max_edges = -1);

/// Full Masur-Veech polynomial through the graph sum; must equal
/// Session::mv_polynomial. For n = 0 the result has a single empty-index
/// coefficient, the number V Omega^MV_{g,0}.
EvenPolynomial mv_polynomial_via_graphs(Session& s, int g, int n);

/// Leading coefficient H*_{g,n}[d] = H_{g,n}[3g-3+n-d]; only graphs with at
/// most d edges can contribute at codimension d, so the sum is restricted.
PiPoly leading_coefficient(Session& s, int g, int n, int d);

}  // namespace mvt
