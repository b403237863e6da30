#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eds/graph.hpp"

namespace eds {

// Verdict of the perfect-code check |N[v] ∩ D| = 1 for every v. violations
// lists the vertices covered zero times or more than once, with the count.
struct VerifyReport {
    bool ok = true;
    std::vector<std::pair<int, int>> violations;

    explicit operator bool() const { return ok; }
};

VerifyReport verify_eds(const Graph& g, const std::vector<int>& set);
VerifyReport verify_eds(const Graph& g, const Bitset& set);

class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact ground-truth machinery, formulated as exact cover of V by closed
// neighborhoods. Exponential in the worst case; the guard refuses instances
// it was never meant for. Branches on the lowest-id uncovered vertex by
// default; min_candidates switches to a fewest-choices heuristic (kept off
// so traces stay reproducible).
struct OracleOptions {
    int size_guard = 64;
    bool min_candidates = false;
};

std::optional<std::vector<int>> solve_exact(const Graph& g, const OracleOptions& opts = {});
long long count_eds(const Graph& g, const OracleOptions& opts = {});
std::vector<std::vector<int>> enumerate_eds(const Graph& g, const OracleOptions& opts = {.size_guard = 20});

}  // namespace eds
