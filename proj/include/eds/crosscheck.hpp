#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eds/graph.hpp"

namespace eds {

// Randomized solver-vs-oracle agreement run. Instances are derived purely
// from (seed, index), so runs are reproducible and parallelizable.
struct CrosscheckParams {
    int count = 1000;          // instances to check (after filtering)
    int max_n = 12;            // vertex-count ceiling per instance
    std::uint64_t seed = 1;
    bool class_members_only = true;  // keep only recognized class members
    bool solver_checks_class = true; // how solve() is invoked
    long long fallback_budget = 200000;
    int jobs = 1;
};

struct CrosscheckReport {
    int checked = 0;
    int agree = 0;
    long long fallback_activations = 0;
    int give_ups = 0;
    int generator_attempts = 0;
    long long total_nodes = 0;
    long long max_nodes = 0;
    double max_node_ratio = 0.0;  // max over instances of nodes / n^3
    std::vector<std::string> disagreements;  // graph6 of each failing instance

    bool all_agree() const { return checked == agree && give_ups == 0; }
};

CrosscheckReport run_crosscheck(const CrosscheckParams& params);

}  // namespace eds
