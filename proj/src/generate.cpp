#include "eds/generate.hpp"

#include <random>
#include <stdexcept>

#include "eds/recognizers.hpp"

namespace eds {

Graph make_path(int k) {
    if (k < 0) throw std::invalid_argument("path size must be non-negative");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return build_graph(k, edges);
}

Graph make_cycle(int len) {
    if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
    return build_graph(len, edges);
}

namespace {

// Edge draw without std::bernoulli_distribution so the sampled edge set
// depends only on the mt19937_64 stream, not on the standard library.
bool coin(std::mt19937_64& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    // 53-bit uniform in [0,1)
    double u = double(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

}  // namespace

Graph random_bipartite(int nx, int ny, double p, std::uint64_t seed) {
    if (nx < 0 || ny < 0) throw std::invalid_argument("side sizes must be non-negative");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    int n = nx + ny;
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            if (coin(rng, p)) edges.emplace_back(x, nx + y);
    Graph g = build_graph(n, edges);
    std::vector<int> color(n, 1);
    for (int x = 0; x < nx; ++x) color[x] = 0;
    g.coloring = std::move(color);
    return g;
}

RejectionSample random_s133_free_bipartite(int nx, int ny, double p, std::uint64_t seed,
                                           int budget) {
    RejectionSample out;
    std::mt19937_64 seeder(seed);
    for (int attempt = 1; attempt <= budget; ++attempt) {
        out.attempts = attempt;
        Graph g = random_bipartite(nx, ny, p, seeder());
        if (is_s133_free_bipartite(g).verdict == ClassVerdict::yes) {
            out.graph = std::move(g);
            return out;
        }
    }
    return out;
}

}  // namespace eds
