#include "eds/state.hpp"

#include <numeric>
#include <stdexcept>

namespace eds {

EdsState::EdsState(const Graph& g)
    : g_(&g),
      status_(g.n, VertexStatus::undecided),
      dominated_by_(g.n, -1),
      forced_(g.n),
      excluded_(g.n),
      dominated_(g.n) {}

EdsState::EdsState(const Graph& g, const Bitset& excluded) : EdsState(g) {
    excluded.for_each([&](int v) {
        status_[v] = VertexStatus::excluded;
        excluded_.set(v);
    });
}

void EdsState::set_status(int v, VertexStatus s) {
    trail_.push_back({v, status_[v], dominated_by_[v]});
    if (status_[v] == VertexStatus::forced) forced_.reset(v);
    if (status_[v] == VertexStatus::excluded) excluded_.reset(v);
    status_[v] = s;
    if (s == VertexStatus::forced) forced_.set(v);
    if (s == VertexStatus::excluded) excluded_.set(v);
}

void EdsState::set_dominated_by(int v, int u) {
    trail_.push_back({v, status_[v], dominated_by_[v]});
    dominated_by_[v] = u;
    if (u == -1)
        dominated_.reset(v);
    else
        dominated_.set(v);
}

void EdsState::undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
        const TrailEntry& e = trail_.back();
        if (status_[e.vertex] == VertexStatus::forced) forced_.reset(e.vertex);
        if (status_[e.vertex] == VertexStatus::excluded) excluded_.reset(e.vertex);
        status_[e.vertex] = e.old_status;
        if (e.old_status == VertexStatus::forced) forced_.set(e.vertex);
        if (e.old_status == VertexStatus::excluded) excluded_.set(e.vertex);
        dominated_by_[e.vertex] = e.old_dominated_by;
        if (e.old_dominated_by == -1)
            dominated_.reset(e.vertex);
        else
            dominated_.set(e.vertex);
        trail_.pop_back();
    }
}

PropagationResult EdsState::assume_in_d(int v) {
    PropagationResult res;
    auto contradiction = [&](int at, PropagationResult::Reason why) {
        res.kind = PropagationResult::Kind::contradiction;
        res.vertex = at;
        res.reason = why;
        return res;
    };

    if (status_[v] == VertexStatus::excluded)
        return contradiction(v, PropagationResult::Reason::assumed_excluded_vertex);
    if (status_[v] == VertexStatus::forced) {
        res.kind = PropagationResult::Kind::progress;
        return res;
    }
    if (dominated_by_[v] != -1 && dominated_by_[v] != v)
        return contradiction(v, PropagationResult::Reason::double_domination);

    set_status(v, VertexStatus::forced);
    set_dominated_by(v, v);
    ++res.changes;

    // distance 1: dominated by v, and never in the solution themselves
    bool bad = false;
    int bad_vertex = -1;
    PropagationResult::Reason bad_reason = PropagationResult::Reason::none;
    g_->adj[v].for_each([&](int u) {
        if (bad) return;
        if (status_[u] == VertexStatus::forced) {
            bad = true;
            bad_vertex = u;
            bad_reason = PropagationResult::Reason::adjacent_forced;
            return;
        }
        if (dominated_by_[u] != -1) {
            bad = true;
            bad_vertex = u;
            bad_reason = PropagationResult::Reason::double_domination;
            return;
        }
        if (status_[u] == VertexStatus::undecided) {
            set_status(u, VertexStatus::excluded);
            ++res.changes;
        }
        set_dominated_by(u, v);
    });
    if (bad) return contradiction(bad_vertex, bad_reason);

    // distance 2: a solution member there would doubly dominate some
    // common neighbor
    Bitset second(g_->n);
    g_->adj[v].for_each([&](int u) { second |= g_->adj[u]; });
    second -= g_->adj[v];
    second.reset(v);
    for (int w = second.first(); w != -1; w = second.next(w)) {
        if (status_[w] == VertexStatus::forced)
            return contradiction(w, PropagationResult::Reason::adjacent_forced);
        if (status_[w] == VertexStatus::undecided) {
            set_status(w, VertexStatus::excluded);
            ++res.changes;
        }
    }

    res.kind = PropagationResult::Kind::progress;
    return res;
}

PropagationResult EdsState::exclude(int v) {
    PropagationResult res;
    if (status_[v] == VertexStatus::forced) {
        res.kind = PropagationResult::Kind::contradiction;
        res.vertex = v;
        res.reason = PropagationResult::Reason::excluded_forced_vertex;
        return res;
    }
    if (status_[v] == VertexStatus::undecided) {
        set_status(v, VertexStatus::excluded);
        ++res.changes;
    }
    res.kind = PropagationResult::Kind::progress;
    return res;
}

PropagationResult EdsState::propagate() {
    std::vector<int> order(g_->n);
    std::iota(order.begin(), order.end(), 0);
    return propagate_order(order);
}

PropagationResult EdsState::propagate_order(std::span<const int> order) {
    PropagationResult res;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : order) {
            if (dominated_by_[v] != -1) continue;
            Bitset cand = candidates(v);
            int c = cand.count();
            if (c == 0) {
                res.kind = PropagationResult::Kind::contradiction;
                res.vertex = v;
                res.reason = PropagationResult::Reason::no_candidates;
                return res;
            }
            if (c == 1) {
                PropagationResult step = assume_in_d(cand.first());
                res.changes += step.changes;
                if (!step.ok()) {
                    res.kind = step.kind;
                    res.vertex = step.vertex;
                    res.reason = step.reason;
                    return res;
                }
                changed = true;
            }
        }
    }
    res.kind = PropagationResult::Kind::fixpoint;
    return res;
}

EdsState init_root(const Graph& g, int d) {
    EdsState state(g);
    PropagationResult r = state.assume_in_d(d);
    if (!r.ok()) throw std::logic_error("root assumption contradicted on a fresh state");
    return state;
}

ReducedInstance reduce_graph(const EdsState& state) {
    const Graph& g = state.graph();
    Bitset removed(g.n);
    state.forced_set().for_each([&](int u) {
        removed |= g.adj[u];
        removed.set(u);
    });
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (!removed.test(v)) keep.push_back(v);

    ReducedInstance out;
    InducedSubgraph sub = induced_subgraph(g, keep);
    out.graph = std::move(sub.graph);
    out.orig = std::move(sub.orig);
    out.carried_excluded = Bitset(out.graph.n);
    for (int i = 0; i < out.graph.n; ++i)
        if (state.is_excluded(out.orig[i])) out.carried_excluded.set(i);
    out.fragment = state.forced_vertices();
    return out;
}

}  // namespace eds
