#include "eds/recognizers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eds {

std::vector<int> PatternWitness::vertices() const {
    std::vector<int> out{midpoint};
    for (const auto& leg : legs) out.insert(out.end(), leg.begin(), leg.end());
    return out;
}

bool verify_pattern_witness(const Graph& g, const PatternSpec& spec, const PatternWitness& w) {
    for (int t = 0; t < 3; ++t)
        if (int(w.legs[t].size()) != spec.legs[t]) return false;
    std::vector<int> verts = w.vertices();
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : verts)
        if (v < 0 || v >= g.n) return false;

    // required edges: midpoint to each leg head, consecutive leg vertices
    auto required = [&](int a, int b) { return g.has_edge(a, b); };
    long long edges_needed = 0;
    for (int t = 0; t < 3; ++t) {
        const auto& leg = w.legs[t];
        if (leg.empty()) continue;
        if (!required(w.midpoint, leg[0])) return false;
        for (std::size_t i = 0; i + 1 < leg.size(); ++i)
            if (!required(leg[i], leg[i + 1])) return false;
        edges_needed += static_cast<long long>(leg.size());
    }
    // exactness: the induced subgraph has no edge beyond the pattern's
    long long have = 0;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) ++have;
    return have == edges_needed;
}

namespace {

struct SpiderSearch {
    const Graph& g;
    PatternSpec spec;
    std::array<int, 3> order{};  // leg indices sorted by length ascending
    PatternWitness w;
    Bitset mid_closed;

    explicit SpiderSearch(const Graph& host, PatternSpec s)
        : g(host), spec(s), mid_closed(host.n) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return spec.legs[a] < spec.legs[b]; });
    }

    // A new leg vertex must be adjacent to its predecessor and to nothing
    // else already placed. `blocked` holds the closed neighborhoods of every
    // placed vertex except the midpoint and the predecessor; the midpoint is
    // handled separately because it stays the predecessor of each leg start.
    bool grow(int oi, int pos, int prev, const Bitset& blocked) {
        if (oi == 3) return true;
        int leg = order[oi];
        int len = spec.legs[leg];
        if (pos == len) {
            Bitset next = blocked;
            if (prev != w.midpoint) next |= g.closed(prev);
            return grow(oi + 1, 0, w.midpoint, next);
        }
        Bitset cand = g.adj[prev];
        cand -= blocked;
        if (prev != w.midpoint) cand -= mid_closed;
        // between equal-length legs force ascending first vertices so each
        // unordered copy is explored once
        if (pos == 0 && oi > 0 && spec.legs[order[oi - 1]] == len) {
            int floor_id = w.legs[order[oi - 1]].front();
            for (int v = cand.first(); v != -1 && v <= floor_id; v = cand.next(v)) cand.reset(v);
        }
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            w.legs[leg].push_back(v);
            Bitset next = blocked;
            if (prev != w.midpoint) next |= g.closed(prev);
            if (grow(oi, pos + 1, v, next)) return true;
            w.legs[leg].pop_back();
        }
        return false;
    }

    std::optional<PatternWitness> run() {
        if (g.n < spec.size()) return std::nullopt;
        int stubs = 0;
        for (int t = 0; t < 3; ++t)
            if (spec.legs[t] > 0) ++stubs;
        std::vector<int> mids(g.n);
        std::iota(mids.begin(), mids.end(), 0);
        std::sort(mids.begin(), mids.end(), [&](int a, int b) {
            int da = g.degree(a), db = g.degree(b);
            return da != db ? da > db : a < b;
        });
        for (int m : mids) {
            if (g.degree(m) < stubs) continue;
            w.midpoint = m;
            for (auto& leg : w.legs) leg.clear();
            mid_closed = g.closed(m);
            if (grow(0, 0, m, Bitset(g.n))) return w;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<PatternWitness> find_induced_spider(const Graph& g, const PatternSpec& spec) {
    for (int len : spec.legs)
        if (len < 0) throw std::invalid_argument("leg lengths must be non-negative");
    SpiderSearch search(g, spec);
    auto found = search.run();
    if (found && !verify_pattern_witness(g, spec, *found))
        throw std::logic_error("spider search produced an invalid witness");
    return found;
}

namespace {

// Does this vertex subset induce exactly S_{i,j,k}? Tries every member as the
// midpoint; the rest must split into paths hanging off it. Shares no code
// with the anchored search.
std::optional<PatternWitness> subset_as_spider(const Graph& g, const PatternSpec& spec,
                                               const std::vector<int>& verts) {
    long long edges = 0;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) ++edges;
    int want_edges = spec.legs[0] + spec.legs[1] + spec.legs[2];
    if (edges != want_edges) return std::nullopt;

    std::vector<int> want_lens;
    for (int len : spec.legs)
        if (len > 0) want_lens.push_back(len);
    std::sort(want_lens.begin(), want_lens.end());

    for (int m : verts) {
        std::vector<int> rest;
        for (int v : verts)
            if (v != m) rest.push_back(v);
        // walk the legs: each neighbor of m inside the subset starts one
        std::vector<std::vector<int>> legs;
        std::vector<char> used(rest.size(), 0);
        auto idx_of = [&](int v) {
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (rest[i] == v) return int(i);
            return -1;
        };
        bool ok = true;
        for (int v : rest) {
            if (!g.has_edge(m, v)) continue;
            if (used[idx_of(v)]) continue;
            std::vector<int> leg{v};
            used[idx_of(v)] = 1;
            int prev = m, cur = v;
            while (true) {
                int nxt = -1, options = 0;
                for (int u : rest)
                    if (u != prev && g.has_edge(cur, u) && !used[idx_of(u)]) {
                        nxt = u;
                        ++options;
                    }
                if (options == 0) break;
                if (options > 1) {
                    ok = false;
                    break;
                }
                leg.push_back(nxt);
                used[idx_of(nxt)] = 1;
                prev = cur;
                cur = nxt;
            }
            if (!ok) break;
            legs.push_back(std::move(leg));
        }
        if (!ok) continue;
        bool all_used = std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
        if (!all_used) continue;
        std::vector<int> lens;
        for (const auto& leg : legs) lens.push_back(int(leg.size()));
        std::sort(lens.begin(), lens.end());
        if (lens != want_lens) continue;

        PatternWitness w;
        w.midpoint = m;
        // match walked legs to the spec's leg lengths
        std::vector<char> taken(legs.size(), 0);
        bool fit = true;
        for (int t = 0; t < 3 && fit; ++t) {
            if (spec.legs[t] == 0) continue;
            fit = false;
            for (std::size_t i = 0; i < legs.size(); ++i)
                if (!taken[i] && int(legs[i].size()) == spec.legs[t]) {
                    taken[i] = 1;
                    w.legs[t] = legs[i];
                    fit = true;
                    break;
                }
        }
        if (fit && verify_pattern_witness(g, spec, w)) return w;
    }
    return std::nullopt;
}

}  // namespace

std::optional<PatternWitness> find_induced_spider_brute(const Graph& g, const PatternSpec& spec) {
    int k = spec.size();
    if (g.n < k) return std::nullopt;
    std::vector<int> pick(k);
    std::optional<PatternWitness> found;
    auto rec = [&](auto&& self, int depth, int from) -> bool {
        if (depth == k) {
            found = subset_as_spider(g, spec, pick);
            return found.has_value();
        }
        for (int v = from; v <= g.n - (k - depth); ++v) {
            pick[depth] = v;
            if (self(self, depth + 1, v + 1)) return true;
        }
        return false;
    };
    rec(rec, 0, 0);
    return found;
}

ClassCheck is_s133_free_bipartite(const Graph& g) {
    ClassCheck out;
    if (!bipartition(g)) {
        out.verdict = ClassVerdict::not_bipartite;
        return out;
    }
    auto witness = find_induced_spider(g, PatternSpec::s133());
    if (witness) {
        out.verdict = ClassVerdict::no;
        out.witness = std::move(witness);
    }
    return out;
}

std::optional<AnchoredP8> find_anchored_p8(const Graph& g, const DistanceLevels& lv) {
    if (lv.deepest() < 6) return std::nullopt;
    // reachable[i] = level-(i+2) vertices that start a level-transversal path
    // down to level 6
    std::array<Bitset, 5> reach;  // indices 0..4 for levels 2..6
    reach[4] = lv.level(6);
    for (int i = 3; i >= 0; --i) {
        int level = i + 2;
        reach[i] = Bitset(g.n);
        Bitset here = lv.level(level);
        here.for_each([&](int v) {
            if (g.adj[v].intersects(reach[i + 1])) reach[i].set(v);
        });
    }
    Bitset n1 = lv.level(1);
    for (int r2 = reach[0].first(); r2 != -1; r2 = reach[0].next(r2)) {
        Bitset non_nbrs = n1 - g.adj[r2];
        if (non_nbrs.none()) continue;
        AnchoredP8 out;
        out.s1 = non_nbrs.first();
        out.r[1] = r2;
        out.r[0] = (g.adj[r2] & n1).first();
        int prev = r2;
        bool ok = true;
        for (int i = 2; i < 6; ++i) {
            Bitset nxt = g.adj[prev] & (i < 5 ? reach[i - 1] : lv.level(6));
            if (nxt.none()) {
                ok = false;
                break;
            }
            out.r[i] = nxt.first();
            prev = out.r[i];
        }
        if (ok && out.r[0] != -1) return out;
    }
    return std::nullopt;
}

}  // namespace eds
