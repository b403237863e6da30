#pragma once

#include <cstdint>
#include <optional>

#include "eds/graph.hpp"

namespace eds {

// Path on k vertices (0-1-2-...-k-1). k = 0 gives the empty graph.
Graph make_path(int k);

// Cycle on len >= 3 vertices.
Graph make_cycle(int len);

// G(nx, ny, p): every left/right pair becomes an edge independently.
// Deterministic for a fixed seed; coloring is set (left = 0, right = 1).
Graph random_bipartite(int nx, int ny, double p, std::uint64_t seed);

// Rejection sampling against the class recognizer. graph is empty when the
// attempt budget ran out; attempts reports how many samples were drawn.
struct RejectionSample {
    std::optional<Graph> graph;
    int attempts = 0;
};
RejectionSample random_s133_free_bipartite(int nx, int ny, double p, std::uint64_t seed,
                                           int budget = 10000);

}  // namespace eds
