#include "mvt/graph_sum.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "mvt/combinatorics.hpp"

namespace mvt {

namespace {

/// One evaluation of the decorated sum for a fixed graph. Half-edge slots are
/// grouped by vertex; the slots carrying leaves are pinned to the queried
/// decoration, the edge ends range over all assignments that exhaust each
/// vertex's dimension.
PiPoly graph_term(Session& s, const StableGraph& sg, const std::vector<int>& leaf_dec) {
    int nv = sg.num_vertices();
    int ne = sg.num_edges();

    // Per-vertex leftover dimension after leaf decorations.
    std::vector<int> rdim(static_cast<size_t>(nv));
    std::vector<std::vector<int>> leaf_at(static_cast<size_t>(nv));
    for (size_t i = 0; i < leaf_dec.size(); ++i)
        leaf_at[static_cast<size_t>(sg.leaf_vertex[i])].push_back(leaf_dec[i]);
    for (int v = 0; v < nv; ++v) {
        int dv = dimension(sg.genus[static_cast<size_t>(v)], sg.valency(v));
        for (int ld : leaf_at[static_cast<size_t>(v)]) dv -= ld;
        if (dv < 0) return PiPoly();
        rdim[static_cast<size_t>(v)] = dv;
    }

    // Edge-end slots per vertex, in (edge, end) order.
    std::vector<std::vector<std::pair<int, int>>> slots(static_cast<size_t>(nv));
    for (int e = 0; e < ne; ++e) {
        slots[static_cast<size_t>(sg.edges[static_cast<size_t>(e)].first)].push_back({e, 0});
        slots[static_cast<size_t>(sg.edges[static_cast<size_t>(e)].second)].push_back({e, 1});
    }

    std::vector<std::array<int, 2>> edge_dec(static_cast<size_t>(ne), {0, 0});
    PiPoly total;

    std::function<void(int, PiPoly)> assign = [&](int v, PiPoly partial) {
        if (v == nv) {
            PiPoly term = std::move(partial);
            for (int e = 0; e < ne; ++e)
                term *= twist_weight(edge_dec[static_cast<size_t>(e)][0], edge_dec[static_cast<size_t>(e)][1]);
            total += term;
            return;
        }
        auto& vslots = slots[static_cast<size_t>(v)];
        int budget = rdim[static_cast<size_t>(v)];
        // Enumerate compositions of `budget` over this vertex's edge ends.
        std::function<void(size_t, int)> comp = [&](size_t si, int left) {
            if (si == vslots.size()) {
                if (left != 0) return;
                std::vector<int> local = leaf_at[static_cast<size_t>(v)];
                for (auto [e, end] : vslots) local.push_back(edge_dec[static_cast<size_t>(e)][static_cast<size_t>(end)]);
                Rational fk = s.kontsevich_coeff(sg.genus[static_cast<size_t>(v)],
                                                 static_cast<int>(local.size()), local);
                if (fk.is_zero()) return;
                assign(v + 1, partial * fk);
                return;
            }
            auto [e, end] = vslots[si];
            for (int val = 0; val <= left; ++val) {
                edge_dec[static_cast<size_t>(e)][static_cast<size_t>(end)] = val;
                comp(si + 1, left - val);
            }
        };
        comp(0, budget);
    };
    assign(0, PiPoly(1));

    return total / Rational(Integer(sg.aut));
}

}  // namespace

PiPoly mv_coeff_via_graphs(Session& s, const std::vector<StableGraph>& graphs,
                           const std::vector<int>& d, int max_edges) {
    PiPoly acc;
    for (const auto& sg : graphs) {
        if (max_edges >= 0 && sg.num_edges() > max_edges) continue;
        acc += graph_term(s, sg, d);
    }
    return acc;
}

PiPoly mv_coeff_via_graphs(Session& s, int g, int n, const std::vector<int>& d, int max_edges) {
    if (static_cast<int>(d.size()) != n) throw std::invalid_argument("arity mismatch");
    return mv_coeff_via_graphs(s, enumerate_stable_graphs(g, n), d, max_edges);
}

EvenPolynomial mv_polynomial_via_graphs(Session& s, int g, int n) {
    if (!is_stable(g, n)) throw std::invalid_argument("unstable type");
    auto graphs = enumerate_stable_graphs(g, n);
    EvenPolynomial poly(g, n);
    int dim = dimension(g, n);
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int slots, int max_first, int budget) {
        if (slots == 0) {
            PiPoly v = mv_coeff_via_graphs(s, graphs, cur);
            if (!v.is_zero()) poly.set(cur, v);
            return;
        }
        for (int x = std::min(max_first, budget); x >= 0; --x) {
            cur.push_back(x);
            rec(slots - 1, x, budget - x);
            cur.pop_back();
        }
    };
    rec(n, dim, dim);
    return poly;
}

PiPoly leading_coefficient(Session& s, int g, int n, int d) {
    int dim = dimension(g, n);
    if (d < 0 || d > dim) throw std::invalid_argument("codimension out of range");
    std::vector<int> idx(static_cast<size_t>(n), 0);
    if (n > 0) idx[0] = dim - d;
    return mv_coeff_via_graphs(s, g, n, idx, d);
}

}  // namespace mvt
