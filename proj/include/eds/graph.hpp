#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eds/bitset.hpp"

namespace eds {

// Simple undirected graph over dense 0-based vertex ids. Adjacency rows are
// bitsets because the solvers spend nearly all their time intersecting
// neighborhoods with decision masks. Instances are treated as immutable once
// built; every algorithm takes them by const reference.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;
    // optional two-coloring: 0 = left/black, 1 = right/white
    std::optional<std::vector<int>> coloring;

    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }
    long long edge_count() const {
        long long twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }
    Bitset closed(int v) const {
        Bitset b = adj[v];
        b.set(v);
        return b;
    }
};

// Builds a graph from an edge list. Rejects self-loops and out-of-range
// endpoints (the message names the offending edge); duplicate edges collapse.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Deterministic 2-coloring, or nullopt if some component has an odd cycle.
// Each component is rooted at its lowest vertex id, which gets color 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

// BFS layering from a root. levels[0] = {root}; the list ends at the last
// nonempty level. dist[v] = -1 for vertices the root cannot reach.
struct DistanceLevels {
    int root = 0;
    std::vector<int> dist;
    std::vector<Bitset> levels;
    Bitset unreachable;

    int deepest() const { return int(levels.size()) - 1; }
    bool has_level(int i) const { return i >= 0 && i < int(levels.size()); }
    // level set, or an empty set for indices past the deepest level
    Bitset level(int i) const {
        if (has_level(i)) return levels[i];
        return Bitset(int(dist.size()));
    }
};

DistanceLevels distance_levels(const Graph& g, int root);

// Connected components as sorted vertex lists, ordered by lowest member.
std::vector<std::vector<int>> components(const Graph& g);

// True iff every cross pair u in U, w in W is an edge (join) resp. a
// non-edge (cojoin). Overlapping U and W are rejected.
bool is_join(const Graph& g, const Bitset& u, const Bitset& w);
bool is_cojoin(const Graph& g, const Bitset& u, const Bitset& w);

// Induced subgraph on the given (ascending) vertex list; orig maps new ids
// back to the host graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> orig;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts);

inline Bitset vertex_set(int n, const std::vector<int>& verts) {
    Bitset b(n);
    for (int v : verts) b.set(v);
    return b;
}

}  // namespace eds
