#include "eds/oracle.hpp"

#include <functional>

namespace eds {

VerifyReport verify_eds(const Graph& g, const Bitset& set) {
    VerifyReport out;
    for (int v = 0; v < g.n; ++v) {
        int covered = (g.closed(v) & set).count();
        if (covered != 1) {
            out.ok = false;
            out.violations.emplace_back(v, covered);
        }
    }
    return out;
}

VerifyReport verify_eds(const Graph& g, const std::vector<int>& set) {
    return verify_eds(g, vertex_set(g.n, set));
}

namespace {

struct CoverSearch {
    const Graph& g;
    bool min_candidates;
    std::vector<Bitset> closed;
    Bitset covered;
    std::vector<int> chosen;
    std::vector<int> trail;  // cover marks in application order, popped on undo

    // consumes each solution; returning true stops the search
    std::function<bool(const std::vector<int>&)> sink;

    CoverSearch(const Graph& host, const OracleOptions& opts)
        : g(host), min_candidates(opts.min_candidates), covered(host.n) {
        if (host.n > opts.size_guard)
            throw SizeGuardError("instance has " + std::to_string(host.n) +
                                 " vertices, oracle guard is " + std::to_string(opts.size_guard));
        closed.reserve(host.n);
        for (int v = 0; v < host.n; ++v) closed.push_back(host.closed(v));
    }

    int pick_vertex() const {
        int lowest = covered.first_unset();
        if (!min_candidates || lowest == -1) return lowest;
        int best = -1, best_count = -1;
        for (int v = lowest; v != -1; v = next_uncovered(v)) {
            int c = 0;
            closed[v].for_each([&](int u) {
                if (!closed[u].intersects(covered)) ++c;
            });
            if (best == -1 || c < best_count) {
                best = v;
                best_count = c;
            }
        }
        return best;
    }

    int next_uncovered(int v) const {
        for (++v; v < g.n; ++v)
            if (!covered.test(v)) return v;
        return -1;
    }

    bool run() {
        int v = pick_vertex();
        if (v == -1) return sink(chosen);
        // v's unique dominator lies in N[v]; candidates are the members whose
        // closed neighborhood is still untouched
        bool stop = false;
        closed[v].for_each([&](int u) {
            if (stop || closed[u].intersects(covered)) return;
            std::size_t mark = trail.size();
            closed[u].for_each([&](int w) {
                covered.set(w);
                trail.push_back(w);
            });
            chosen.push_back(u);
            stop = run();
            chosen.pop_back();
            while (trail.size() > mark) {
                covered.reset(trail.back());
                trail.pop_back();
            }
        });
        return stop;
    }
};

}  // namespace

std::optional<std::vector<int>> solve_exact(const Graph& g, const OracleOptions& opts) {
    CoverSearch search(g, opts);
    std::optional<std::vector<int>> found;
    search.sink = [&](const std::vector<int>& sol) {
        found = sol;
        return true;
    };
    search.run();
    return found;
}

long long count_eds(const Graph& g, const OracleOptions& opts) {
    CoverSearch search(g, opts);
    long long count = 0;
    search.sink = [&](const std::vector<int>&) {
        ++count;
        return false;
    };
    search.run();
    return count;
}

std::vector<std::vector<int>> enumerate_eds(const Graph& g, const OracleOptions& opts) {
    CoverSearch search(g, opts);
    std::vector<std::vector<int>> all;
    search.sink = [&](const std::vector<int>& sol) {
        all.push_back(sol);
        return false;
    };
    search.run();
    return all;
}

}  // namespace eds
