#include "eds/crosscheck.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "eds/generate.hpp"
#include "eds/io.hpp"
#include "eds/oracle.hpp"
#include "eds/recognizers.hpp"
#include "eds/solver.hpp"

namespace eds {

namespace {

Graph instance_for(const CrosscheckParams& params, int index) {
    std::mt19937_64 rng(params.seed + std::uint64_t(index) * 0x9e3779b97f4a7c15ULL);
    int n = 2 + int(rng() % std::uint64_t(std::max(1, params.max_n - 1)));
    int nx = 1 + int(rng() % std::uint64_t(n - 1));
    int ny = n - nx;
    double p = 0.05 + 0.9 * (double(rng() >> 11) * 0x1.0p-53);
    return random_bipartite(nx, ny, p, rng());
}

}  // namespace

CrosscheckReport run_crosscheck(const CrosscheckParams& params) {
    CrosscheckReport report;
    if (params.count <= 0) return report;

    // generation and filtering stay sequential so the instance list is
    // independent of the worker count
    std::vector<Graph> instances;
    instances.reserve(params.count);
    const long long attempt_cap = 200LL * params.count + 1000;
    for (long long index = 0; int(instances.size()) < params.count && index < attempt_cap;
         ++index) {
        ++report.generator_attempts;
        Graph g = instance_for(params, int(index));
        if (params.class_members_only &&
            is_s133_free_bipartite(g).verdict != ClassVerdict::yes)
            continue;
        instances.push_back(std::move(g));
    }

    struct Row {
        int index;
        std::string g6;
    };
    std::vector<Row> bad;
    std::mutex merge_mutex;
    std::atomic<int> next{0};

    auto worker = [&]() {
        CrosscheckReport local;
        std::vector<Row> local_bad;
        while (true) {
            int i = next.fetch_add(1);
            if (i >= int(instances.size())) break;
            const Graph& g = instances[i];
            SolveOptions opts;
            opts.check_class = params.solver_checks_class;
            opts.fallback_budget = params.fallback_budget;
            SolveOutcome got = solve(g, opts);
            bool oracle_has = solve_exact(g).has_value();

            ++local.checked;
            local.fallback_activations += got.stats.fallback_activations;
            local.total_nodes += got.stats.nodes;
            local.max_nodes = std::max(local.max_nodes, got.stats.nodes);
            double ratio = double(got.stats.nodes) / (double(g.n) * g.n * g.n);
            local.max_node_ratio = std::max(local.max_node_ratio, ratio);

            if (got.verdict == SolveVerdict::give_up) {
                ++local.give_ups;
                local_bad.push_back({i, write_graph6(g)});
                continue;
            }
            bool solver_has = got.found();
            if (solver_has == oracle_has)
                ++local.agree;
            else
                local_bad.push_back({i, write_graph6(g)});
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        report.checked += local.checked;
        report.agree += local.agree;
        report.fallback_activations += local.fallback_activations;
        report.give_ups += local.give_ups;
        report.total_nodes += local.total_nodes;
        report.max_nodes = std::max(report.max_nodes, local.max_nodes);
        report.max_node_ratio = std::max(report.max_node_ratio, local.max_node_ratio);
        bad.insert(bad.end(), local_bad.begin(), local_bad.end());
    };

    int jobs = std::max(1, params.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::sort(bad.begin(), bad.end(), [](const Row& a, const Row& b) { return a.index < b.index; });
    for (auto& row : bad) report.disagreements.push_back(std::move(row.g6));
    return report;
}

}  // namespace eds
