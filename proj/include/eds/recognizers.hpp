#pragma once

#include <array>
#include <optional>
#include <vector>

#include "eds/graph.hpp"

namespace eds {

// Subdivided star S_{i,j,k}: a midpoint with three induced legs of the given
// lengths and no other edges. S_{1,3,3} is the 8-vertex pattern whose absence
// defines the graph class this project targets; S_{0,0,k-1} is the path P_k.
struct PatternSpec {
    std::array<int, 3> legs{0, 0, 0};

    int size() const { return legs[0] + legs[1] + legs[2] + 1; }
    static PatternSpec s133() { return PatternSpec{{1, 3, 3}}; }
};

struct PatternWitness {
    int midpoint = -1;
    std::array<std::vector<int>, 3> legs;  // legs[t] lists the t-th leg outward

    std::vector<int> vertices() const;
};

// True iff the witness induces exactly the pattern's edge set in g. Every
// search below re-verifies its result through this before returning it.
bool verify_pattern_witness(const Graph& g, const PatternSpec& spec, const PatternWitness& w);

// Anchored enumeration: pick a midpoint (descending degree), grow the legs
// shortest-first with non-adjacency pruning. Finds some induced copy or
// reports absence.
std::optional<PatternWitness> find_induced_spider(const Graph& g, const PatternSpec& spec);

// Independent oracle: checks every size()-subset of V. Exponential; intended
// for cross-validation on small graphs only.
std::optional<PatternWitness> find_induced_spider_brute(const Graph& g, const PatternSpec& spec);

enum class ClassVerdict { yes, no, not_bipartite };

struct ClassCheck {
    ClassVerdict verdict = ClassVerdict::yes;
    std::optional<PatternWitness> witness;  // present when verdict == no
};

// Membership test for the solver's target class: bipartite and without an
// induced S_{1,3,3}.
ClassCheck is_s133_free_bipartite(const Graph& g);

// Level-anchored P8 configuration (s1, root, r1, ..., r6): a level-transversal
// path r1..r6 with r_i at distance i from the root, plus a second level-1
// vertex s1 that is not adjacent to r2. In a bipartite layering such a path
// is automatically induced. Drives the solver's deep-case dispatch.
struct AnchoredP8 {
    int s1 = -1;
    std::array<int, 6> r{};  // r[i] sits in level i+1
};

std::optional<AnchoredP8> find_anchored_p8(const Graph& g, const DistanceLevels& lv);

}  // namespace eds
