#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvt/rational.hpp"

namespace mvt {

/// Genus-decorated connected multigraph with labeled leaves: the topological
/// type of a boundary stratum / primitive multicurve of a type-(g,n) surface.
///
/// Representation: vertices 0..V-1 with genus[v]; edges as unordered vertex
/// pairs (u <= v), loops allowed; leaf_vertex[i] is the vertex carrying leaf
/// i+1. Half-edges are implicit: edge ends plus leaves.
struct StableGraph {
    std::vector<int> genus;
    std::vector<std::pair<int, int>> edges;  // sorted pairs, multiset sorted
    std::vector<int> leaf_vertex;
    std::int64_t aut = 1;           // |Aut|, fixing leaves pointwise
    std::int64_t labeled_count = 1; // vertex-labeled structures in this class

    int num_vertices() const { return static_cast<int>(genus.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_leaves() const { return static_cast<int>(leaf_vertex.size()); }
    int betti() const { return num_edges() - num_vertices() + 1; }
    int total_genus() const;

    /// Valency of v: incident edge ends (loops count twice) plus leaves.
    int valency(int v) const;

    /// Edge ends incident to v, as indices into `edges` (loops listed twice).
    std::vector<int> incident_edge_ends(int v) const;

    /// "g=..;edges=[(v,h,v',h')..];leaves=[..];aut=k" dump line.
    std::string dump() const;
};

/// One representative per isomorphism class of stable graphs of type (g,n),
/// in a deterministic order, with automorphism counts. n = 0 is allowed for
/// g >= 2 (no leaves).
std::vector<StableGraph> enumerate_stable_graphs(int g, int n);

}  // namespace mvt
