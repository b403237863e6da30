#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eds/graph.hpp"

namespace eds {

enum class VertexStatus : std::uint8_t { undecided, forced, excluded };

// Outcome of a propagation step. Dead ends are values, not exceptions: the
// solver branches and treats contradictions as ordinary control flow.
struct PropagationResult {
    enum class Kind : std::uint8_t { progress, fixpoint, contradiction };
    enum class Reason : std::uint8_t {
        none,
        assumed_excluded_vertex,   // assume_in_d on an excluded vertex
        excluded_forced_vertex,    // exclude on a forced vertex
        adjacent_forced,           // two chosen vertices at distance 1 or 2
        double_domination,         // a vertex gained a second forced closed-neighbor
        no_candidates,             // a vertex ran out of possible dominators
    };

    Kind kind = Kind::fixpoint;
    int changes = 0;    // status flips performed by this call
    int vertex = -1;    // the vertex a contradiction was detected on
    Reason reason = Reason::none;

    bool ok() const { return kind != Kind::contradiction; }
};

// Per-vertex decision state for the efficient-domination search: every vertex
// is undecided, forced (in every solution extending this state) or excluded
// (in none), plus bookkeeping for which forced vertex dominates whom. All
// changes go through a trail so branches can undo back to any mark.
class EdsState {
public:
    explicit EdsState(const Graph& g);
    EdsState(const Graph& g, const Bitset& excluded);

    const Graph& graph() const { return *g_; }

    VertexStatus status(int v) const { return status_[v]; }
    bool is_forced(int v) const { return status_[v] == VertexStatus::forced; }
    bool is_excluded(int v) const { return status_[v] == VertexStatus::excluded; }
    bool is_dominated(int v) const { return dominated_by_[v] != -1; }
    int dominated_by(int v) const { return dominated_by_[v]; }

    const Bitset& forced_set() const { return forced_; }
    const Bitset& excluded_set() const { return excluded_; }
    const Bitset& dominated_set() const { return dominated_; }
    std::vector<int> forced_vertices() const { return forced_.to_vector(); }

    bool all_dominated() const { return dominated_.count() == g_->n; }

    // possible dominators of v: N[v] minus excluded vertices
    Bitset candidates(int v) const {
        Bitset c = g_->closed(v);
        c -= excluded_;
        return c;
    }

    // Puts v into the solution: v becomes forced, everything at distance 1
    // or 2 becomes excluded, N[v] becomes dominated by v. Any clash with
    // earlier decisions is a contradiction.
    PropagationResult assume_in_d(int v);

    // Marks v impossible. Contradiction if v is forced.
    PropagationResult exclude(int v);

    // Unit propagation to fixpoint: any undominated vertex with no candidate
    // dominator is a contradiction, a single candidate gets forced. Sweeps
    // vertices in ascending id order.
    PropagationResult propagate();
    // Same fixpoint computed with a caller-chosen sweep order (used to test
    // confluence). order must be a permutation of 0..n-1.
    PropagationResult propagate_order(std::span<const int> order);

    // trail marks for branch-and-undo
    std::size_t mark() const { return trail_.size(); }
    void undo_to(std::size_t mark);

    // full logical state, for snapshot comparisons in tests
    bool same_state(const EdsState& o) const {
        return status_ == o.status_ && dominated_by_ == o.dominated_by_;
    }

private:
    struct TrailEntry {
        int vertex;
        VertexStatus old_status;
        int old_dominated_by;
    };

    void set_status(int v, VertexStatus s);
    void set_dominated_by(int v, int u);

    const Graph* g_;
    std::vector<VertexStatus> status_;
    std::vector<int> dominated_by_;
    Bitset forced_, excluded_, dominated_;
    std::vector<TrailEntry> trail_;
};

// Fresh state rooted at d: d forced, its first and second neighborhoods
// excluded, N[d] dominated. Never contradicts on a fresh state.
EdsState init_root(const Graph& g, int d);

// Removes N[u] for every forced u. Vertices at distance exactly 2 from a
// forced vertex survive and stay excluded in the reduced instance (carried
// exclusions); the forced set is returned as the accumulated solution
// fragment. Contract: the host graph has a solution extending the state iff
// the reduced graph has one that avoids the carried exclusions, and the two
// are related by adding the fragment.
struct ReducedInstance {
    Graph graph;
    std::vector<int> orig;     // reduced id -> host id
    Bitset carried_excluded;   // over reduced ids
    std::vector<int> fragment; // host ids of the forced set
};

ReducedInstance reduce_graph(const EdsState& state);

}  // namespace eds
