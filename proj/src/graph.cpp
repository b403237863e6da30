#include "eds/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace eds {

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.adj.assign(n, Bitset(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") has an endpoint outside [0," << n << ")";
            throw std::invalid_argument(os.str());
        }
        if (u == v) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") is a self-loop";
            throw std::invalid_argument(os.str());
        }
        g.adj[u].set(v);
        g.adj[v].set(u);
    }
    return g;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.n, -1);
    std::deque<int> queue;
    for (int root = 0; root < g.n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            bool ok = true;
            g.adj[v].for_each([&](int w) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    ok = false;
                }
            });
            if (!ok) return std::nullopt;
        }
    }
    return color;
}

DistanceLevels distance_levels(const Graph& g, int root) {
    if (root < 0 || root >= g.n) throw std::invalid_argument("root out of range");
    DistanceLevels out;
    out.root = root;
    out.dist.assign(g.n, -1);
    out.unreachable = Bitset(g.n);

    out.dist[root] = 0;
    Bitset frontier(g.n);
    frontier.set(root);
    Bitset seen = frontier;
    out.levels.push_back(frontier);
    while (true) {
        Bitset nxt(g.n);
        frontier.for_each([&](int v) { nxt |= g.adj[v]; });
        nxt -= seen;
        if (nxt.none()) break;
        int d = int(out.levels.size());
        nxt.for_each([&](int v) { out.dist[v] = d; });
        seen |= nxt;
        out.levels.push_back(nxt);
        frontier = nxt;
    }
    for (int v = 0; v < g.n; ++v)
        if (out.dist[v] == -1) out.unreachable.set(v);
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    Bitset seen(g.n);
    for (int root = 0; root < g.n; ++root) {
        if (seen.test(root)) continue;
        Bitset comp(g.n);
        comp.set(root);
        Bitset frontier = comp;
        while (frontier.any()) {
            Bitset nxt(g.n);
            frontier.for_each([&](int v) { nxt |= g.adj[v]; });
            nxt -= comp;
            comp |= nxt;
            frontier = nxt;
        }
        seen |= comp;
        out.push_back(comp.to_vector());
    }
    return out;
}

static void check_disjoint(const Bitset& u, const Bitset& w) {
    if (u.intersects(w)) throw std::invalid_argument("vertex sets overlap");
}

bool is_join(const Graph& g, const Bitset& u, const Bitset& w) {
    check_disjoint(u, w);
    bool ok = true;
    u.for_each([&](int v) {
        if (!w.subset_of(g.adj[v])) ok = false;
    });
    return ok;
}

bool is_cojoin(const Graph& g, const Bitset& u, const Bitset& w) {
    check_disjoint(u, w);
    bool ok = true;
    u.for_each([&](int v) {
        if (g.adj[v].intersects(w)) ok = false;
    });
    return ok;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    InducedSubgraph out;
    out.orig = verts;
    std::sort(out.orig.begin(), out.orig.end());
    int m = int(out.orig.size());
    std::vector<int> newid(g.n, -1);
    for (int i = 0; i < m; ++i) newid[out.orig[i]] = i;
    out.graph.n = m;
    out.graph.adj.assign(m, Bitset(m));
    for (int i = 0; i < m; ++i) {
        g.adj[out.orig[i]].for_each([&](int w) {
            if (newid[w] != -1) out.graph.adj[i].set(newid[w]);
        });
    }
    return out;
}

}  // namespace eds
