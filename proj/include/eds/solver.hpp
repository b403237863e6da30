#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eds/recognizers.hpp"
#include "eds/state.hpp"

namespace eds {

struct SolveOptions {
    // run the class recognizer first and refuse non-members
    bool check_class = false;
    // trust that the input is in class without checking; skips the
    // completeness-confirmation fallback on exhausted case enumerations
    bool assume_class = false;
    // force this root for the component containing it
    std::optional<int> root;
    // node allowance for the defensive complete search; 0 makes any
    // activation give up immediately
    long long fallback_budget = 200000;
    // verify the pair-support structural assertions and report an extracted
    // pattern witness when they fail (signals an off-class input)
    bool debug_checks = false;
};

enum class SolveVerdict {
    found,            // solution attached, verified
    no_eds,           // exhaustive: no efficient dominating set exists
    class_violation,  // recognizer refused (check_class only)
    not_bipartite,    // recognizer refused (check_class only)
    give_up,          // fallback budget exhausted; existence undecided
};

const char* to_string(SolveVerdict v);

struct TraceEntry {
    int depth = 0;
    std::string text;
};

struct SolveStats {
    long long nodes = 0;           // roots + enumeration branches + fallback nodes
    int fallback_activations = 0;  // times the defensive search was entered
    int max_depth = 0;             // deepest reduce-and-recurse nesting
    bool class_pruned = false;     // some step relied on a class-only bound
};

struct SolveOutcome {
    SolveVerdict verdict = SolveVerdict::no_eds;
    std::vector<int> solution;                 // host-graph ids, ascending
    std::optional<PatternWitness> witness;     // class_violation, or debug report
    std::vector<TraceEntry> trace;
    SolveStats stats;

    bool found() const { return verdict == SolveVerdict::found; }
};

// Decides efficient domination per connected component: fixes the lowest
// vertex v0, tries each candidate dominator of v0 as the root, and runs the
// distance-level case dispatch with reduce-and-recurse. Solutions are
// verified before they are returned.
SolveOutcome solve(const Graph& g, const SolveOptions& opts = {});

// Same, but the component containing `root` must use that root. Other
// components fall back to the standard loop.
SolveOutcome solve_with_root(const Graph& g, int root, const SolveOptions& opts = {});

}  // namespace eds
