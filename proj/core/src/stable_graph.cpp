#include "mvt/stable_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "mvt/multi_index.hpp"

namespace mvt {

int StableGraph::total_genus() const {
    return std::accumulate(genus.begin(), genus.end(), 0) + betti();
}

int StableGraph::valency(int v) const {
    int k = 0;
    for (const auto& [a, b] : edges) k += (a == v) + (b == v);
    for (int lv : leaf_vertex) k += (lv == v);
    return k;
}

std::vector<int> StableGraph::incident_edge_ends(int v) const {
    std::vector<int> out;
    for (size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].first == v) out.push_back(static_cast<int>(e));
        if (edges[e].second == v) out.push_back(static_cast<int>(e));
    }
    return out;
}

std::string StableGraph::dump() const {
    std::ostringstream s;
    s << "g=";
    for (size_t v = 0; v < genus.size(); ++v) s << (v ? "," : "") << genus[v];
    s << ";edges=[";
    for (size_t e = 0; e < edges.size(); ++e) {
        if (e) s << ",";
        s << "(" << edges[e].first << "," << 2 * e << "," << edges[e].second << "," << 2 * e + 1 << ")";
    }
    s << "];leaves=[";
    for (size_t i = 0; i < leaf_vertex.size(); ++i) s << (i ? "," : "") << leaf_vertex[i];
    s << "];aut=" << aut;
    return s.str();
}

namespace {

struct Labeled {
    std::vector<int> genus;
    std::vector<std::pair<int, int>> edges;  // each pair (u <= v), list sorted
    std::vector<int> leaf_vertex;
};

using Key = std::tuple<std::vector<int>, std::vector<std::pair<int, int>>, std::vector<int>>;

Key apply_perm(const Labeled& x, const std::vector<int>& perm) {
    int nv = static_cast<int>(x.genus.size());
    std::vector<int> g(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) g[static_cast<size_t>(perm[static_cast<size_t>(v)])] = x.genus[static_cast<size_t>(v)];
    std::vector<std::pair<int, int>> es;
    es.reserve(x.edges.size());
    for (auto [u, v] : x.edges) {
        int a = perm[static_cast<size_t>(u)], b = perm[static_cast<size_t>(v)];
        es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    std::vector<int> lv;
    lv.reserve(x.leaf_vertex.size());
    for (int v : x.leaf_vertex) lv.push_back(perm[static_cast<size_t>(v)]);
    return {std::move(g), std::move(es), std::move(lv)};
}

bool connected(const Labeled& x) {
    int nv = static_cast<int>(x.genus.size());
    if (nv == 1) return true;
    std::vector<int> parent(static_cast<size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[static_cast<size_t>(a)] == a ? a : parent[static_cast<size_t>(a)] = find(parent[static_cast<size_t>(a)]); };
    for (auto [u, v] : x.edges) parent[static_cast<size_t>(find(u))] = find(v);
    for (int v = 1; v < nv; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

}  // namespace

std::vector<StableGraph> enumerate_stable_graphs(int g, int n) {
    if (!is_stable(g, n)) throw std::invalid_argument("unstable type");

    struct ClassInfo {
        Labeled rep;
        std::int64_t raw_count = 0;
    };
    std::map<Key, ClassInfo> classes;

    int max_nv = 2 * g - 2 + n;  // each vertex has 2h-2+k >= 1, total 2g-2+n
    for (int nv = 1; nv <= max_nv; ++nv) {
        // pair types (i <= j)
        std::vector<std::pair<int, int>> types;
        for (int i = 0; i < nv; ++i)
            for (int j = i; j < nv; ++j) types.emplace_back(i, j);

        std::vector<int> genus(static_cast<size_t>(nv), 0);
        std::function<void(int, int)> genus_loop = [&](int v, int budget) {
            if (v == nv) {
                int b1_missing = budget;  // g - sum(h)
                int ecount = b1_missing + nv - 1;
                if (ecount < 0 || ecount > 3 * g - 3 + n) return;
                if (nv > 1 && ecount < nv - 1) return;

                std::vector<int> leaf(static_cast<size_t>(n), 0);
                std::function<void(int)> leaf_loop = [&](int li) {
                    if (li == n) {
                        // enumerate edge multisets of size ecount over types
                        std::vector<std::pair<int, int>> edges;
                        std::function<void(size_t, int)> edge_loop = [&](size_t t, int left) {
                            if (left == 0) {
                                Labeled x{genus, edges, leaf};
                                if (!connected(x)) return;
                                for (int v2 = 0; v2 < nv; ++v2) {
                                    int k = 0;
                                    for (auto [a, b] : edges) k += (a == v2) + (b == v2);
                                    for (int lvv : leaf) k += (lvv == v2);
                                    if (2 * genus[static_cast<size_t>(v2)] - 2 + k <= 0) return;
                                }
                                // canonical key: minimum over vertex relabelings
                                std::vector<int> perm(static_cast<size_t>(nv));
                                std::iota(perm.begin(), perm.end(), 0);
                                Key best = apply_perm(x, perm);
                                while (std::next_permutation(perm.begin(), perm.end())) {
                                    Key k2 = apply_perm(x, perm);
                                    if (k2 < best) best = std::move(k2);
                                }
                                auto& info = classes[best];
                                if (info.raw_count == 0) {
                                    info.rep.genus = std::get<0>(best);
                                    info.rep.edges = std::get<1>(best);
                                    info.rep.leaf_vertex = std::get<2>(best);
                                }
                                info.raw_count += 1;
                                return;
                            }
                            if (t == types.size()) return;
                            // multiplicity of this type: 0..left
                            edge_loop(t + 1, left);
                            for (int m = 1; m <= left; ++m) {
                                for (int i = 0; i < m; ++i) edges.push_back(types[t]);
                                edge_loop(t + 1, left - m);
                                for (int i = 0; i < m; ++i) edges.pop_back();
                            }
                        };
                        edge_loop(0, ecount);
                        return;
                    }
                    for (int v2 = 0; v2 < nv; ++v2) {
                        leaf[static_cast<size_t>(li)] = v2;
                        leaf_loop(li + 1);
                    }
                };
                leaf_loop(0);
                return;
            }
            for (int h = 0; h <= budget; ++h) {
                genus[static_cast<size_t>(v)] = h;
                genus_loop(v + 1, budget - h);
            }
        };
        genus_loop(0, g);
    }

    std::vector<StableGraph> out;
    out.reserve(classes.size());
    for (auto& [key, info] : classes) {
        StableGraph sg;
        sg.genus = info.rep.genus;
        sg.edges = info.rep.edges;
        sg.leaf_vertex = info.rep.leaf_vertex;
        sg.labeled_count = info.raw_count;

        // |Aut| = |Stab| * 2^(#loops) * prod over parallel classes of m!
        int nv = sg.num_vertices();
        std::vector<int> perm(static_cast<size_t>(nv));
        std::iota(perm.begin(), perm.end(), 0);
        Labeled x{sg.genus, sg.edges, sg.leaf_vertex};
        Key self = apply_perm(x, perm);
        std::int64_t stab = 0;
        do {
            if (apply_perm(x, perm) == self) ++stab;
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::int64_t ext = 1;
        std::map<std::pair<int, int>, int> mult;
        for (auto& e : sg.edges) {
            mult[e] += 1;
            if (e.first == e.second) ext *= 2;
        }
        for (auto& [e, m] : mult)
            for (int i = 2; i <= m; ++i) ext *= i;

        sg.aut = stab * ext;
        out.push_back(std::move(sg));
    }
    return out;
}

}  // namespace mvt
