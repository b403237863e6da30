#include <doctest.h>

#include <algorithm>
#include <random>

#include "eds/crosscheck.hpp"
#include "eds/generate.hpp"
#include "eds/oracle.hpp"
#include "eds/solver.hpp"

using namespace eds;

namespace {

bool trace_contains(const SolveOutcome& out, const std::string& needle) {
    for (const auto& e : out.trace)
        if (e.text.find(needle) != std::string::npos) return true;
    return false;
}

Graph random_any(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (double(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

// gadget with one level-1 vertex, two level-2 vertices on a 4-cycle with it,
// three level-3 vertices and a single level-4 vertex hanging off the third
Graph shallow_gadget() {
    return build_graph(8, {{0, 1},   // root to level 1
                           {1, 2},
                           {1, 3},   // level 2
                           {2, 6},
                           {3, 6},   // the shared level-3 vertex
                           {2, 4},
                           {3, 5},   // private level-3 vertices
                           {6, 7}}); // level 4
}

}  // namespace

TEST_CASE("solve on paths agrees with the known sets") {
    SolveOutcome out = solve(make_path(10));
    REQUIRE(out.found());
    CHECK(verify_eds(make_path(10), out.solution).ok);
    CHECK(solve_exact(make_path(10)).has_value());
    CHECK(out.stats.fallback_activations == 0);
}

TEST_CASE("solve refuses nothing but finds nothing on the 8-cycle") {
    SolveOutcome out = solve(make_cycle(8));
    CHECK(out.verdict == SolveVerdict::no_eds);
    CHECK(out.stats.fallback_activations == 0);
}

TEST_CASE("class gate verdicts") {
    CHECK(solve(make_cycle(5), {.check_class = true}).verdict == SolveVerdict::not_bipartite);

    Graph planted = build_graph(8, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}});
    SolveOutcome out = solve(planted, {.check_class = true});
    CHECK(out.verdict == SolveVerdict::class_violation);
    REQUIRE(out.witness.has_value());
    CHECK(verify_pattern_witness(planted, PatternSpec::s133(), *out.witness));
    // without the gate the answer still matches ground truth
    SolveOutcome open = solve(planted);
    CHECK(open.found() == solve_exact(planted).has_value());
}

TEST_CASE("rooted solves on small cycles") {
    for (int d = 0; d < 6; ++d) {
        SolveOutcome out = solve_with_root(make_cycle(6), d);
        REQUIRE(out.found());
        std::vector<int> expect{d, (d + 3) % 6};
        std::sort(expect.begin(), expect.end());
        CHECK(out.solution == expect);
    }
    CHECK(solve_with_root(make_cycle(4), 0).verdict == SolveVerdict::no_eds);
}

TEST_CASE("the shallow gadget resolves to the forced set") {
    Graph g = shallow_gadget();
    SolveOutcome out = solve_with_root(g, 0);
    REQUIRE(out.found());
    CHECK(out.solution == std::vector<int>{0, 4, 5, 7});
    CHECK(trace_contains(out, "case=N5_EMPTY(2.1)"));
    CHECK(out.stats.fallback_activations == 0);
}

TEST_CASE("gadget variant with two private deep neighbors dies") {
    // the shared level-3 vertex now has two private level-4 neighbors
    Graph g = build_graph(9, {{0, 1},
                              {1, 2},
                              {1, 3},
                              {2, 6},
                              {3, 6},
                              {2, 4},
                              {3, 5},
                              {6, 7},
                              {6, 8}});
    CHECK(!solve_exact(g).has_value());
    SolveOutcome out = solve(g);
    CHECK(out.verdict == SolveVerdict::no_eds);
}

TEST_CASE("empty level-3 support pool needs no enumeration") {
    Graph p5 = make_path(5);
    SolveOutcome out = solve_with_root(p5, 0);
    REQUIRE(out.found());
    CHECK(out.solution == std::vector<int>{0, 3});
    CHECK(trace_contains(out, "case=N5_EMPTY"));
    CHECK(!trace_contains(out, "level-3 support {"));
}

TEST_CASE("level-5 terminal dispatch") {
    // an endpoint root of the 6-path dies; the full solve recovers via the
    // next root
    SolveOutcome rooted = solve_with_root(make_path(6), 0);
    CHECK(rooted.verdict == SolveVerdict::no_eds);
    SolveOutcome out = solve(make_path(6));
    REQUIRE(out.found());
    CHECK(out.solution == std::vector<int>{1, 4});
    CHECK(verify_eds(make_path(6), out.solution).ok);

    SolveOutcome c10 = solve(make_cycle(10));
    CHECK(c10.verdict == SolveVerdict::no_eds);
    CHECK(trace_contains(c10, "case=N6_EMPTY"));

    // middle root of an 11-path reaches the same dispatch and honestly fails
    SolveOutcome mid = solve_with_root(make_path(11), 5);
    CHECK(mid.verdict == SolveVerdict::no_eds);
    CHECK(trace_contains(mid, "case=N6_EMPTY"));
    bool oracle_has_middle = false;
    for (const auto& sol : enumerate_eds(make_path(11)))
        if (std::find(sol.begin(), sol.end(), 5) != sol.end()) oracle_has_middle = true;
    CHECK(!oracle_has_middle);
}

TEST_CASE("deep dispatch on the paper fixtures") {
    // 12-cycle rooted anywhere goes through the anchored branch
    SolveOutcome c12 = solve_with_root(make_cycle(12), 0);
    REQUIRE(c12.found());
    CHECK(c12.solution == std::vector<int>{0, 3, 6, 9});
    CHECK(trace_contains(c12, "case=P8_CASE(B.2)"));

    // 13-path rooted at the middle
    SolveOutcome p13 = solve_with_root(make_path(13), 6);
    REQUIRE(p13.found());
    CHECK(p13.solution == std::vector<int>{0, 3, 6, 9, 12});
    CHECK(trace_contains(p13, "case=P8_CASE(B.2)"));

    // endpoint-rooted 7-path has a single level-1 vertex: no anchor
    SolveOutcome p7 = solve_with_root(make_path(7), 0);
    REQUIRE(p7.found());
    CHECK(p7.solution == std::vector<int>{0, 3, 6});
    CHECK(trace_contains(p7, "case=NO_P8(N7_EMPTY)"));
    CHECK(trace_contains(p7, "frontier exclusion level 5"));

    // 14-cycle has no solution at all
    SolveOutcome c14 = solve(make_cycle(14));
    CHECK(c14.verdict == SolveVerdict::no_eds);
    CHECK(!solve_exact(make_cycle(14)).has_value());

    // endpoint-rooted 10-path: deepest level 9
    SolveOutcome p10 = solve_with_root(make_path(10), 0);
    REQUIRE(p10.found());
    CHECK(p10.solution == std::vector<int>{0, 3, 6, 9});
    CHECK(trace_contains(p10, "case=NO_P8(N9_TERMINAL)"));

    // endpoint-rooted 11-path: level 10 nonempty
    SolveOutcome p11 = solve_with_root(make_path(11), 0);
    REQUIRE(p11.found());
    CHECK(p11.solution == std::vector<int>{0, 3, 6, 9});
    CHECK(trace_contains(p11, "case=NO_P8(N10_NONEMPTY)"));
}

TEST_CASE("cycle law through the main solver") {
    for (int k = 2; k <= 15; ++k) {
        SolveOutcome out = solve(make_cycle(2 * k));
        CHECK(out.found() == (k % 3 == 0));
        if (out.found()) CHECK(verify_eds(make_cycle(2 * k), out.solution).ok);
        CHECK(out.stats.fallback_activations == 0);
    }
}

TEST_CASE("path family through the main solver") {
    for (int k = 1; k <= 30; ++k) {
        SolveOutcome out = solve(make_path(k));
        REQUIRE(out.found());
        CHECK(verify_eds(make_path(k), out.solution).ok);
        CHECK(out.stats.fallback_activations == 0);
    }
}

TEST_CASE("existence matches ground truth on mixed random graphs") {
    std::mt19937_64 rng(777);
    for (int round = 0; round < 400; ++round) {
        int n = 3 + int(rng() % 10);
        Graph g = (round % 2) ? random_any(n, 0.25 + 0.05 * double(round % 6), rng())
                              : random_bipartite(n / 2, n - n / 2, 0.35, rng());
        SolveOutcome out = solve(g);
        REQUIRE(out.verdict != SolveVerdict::give_up);
        CHECK(out.found() == solve_exact(g).has_value());
        if (out.found()) CHECK(verify_eds(g, out.solution).ok);
    }
}

TEST_CASE("root completeness against the oracle") {
    std::mt19937_64 rng(888);
    for (int round = 0; round < 150; ++round) {
        int n = 3 + int(rng() % 8);
        Graph g = random_any(n, 0.3, rng());
        if (components(g).size() != 1) continue;
        bool oracle_has = solve_exact(g).has_value();
        bool any_root = false;
        Bitset roots = g.closed(0);
        for (int d = roots.first(); d != -1; d = roots.next(d))
            if (solve_with_root(g, d).found()) any_root = true;
        CHECK(any_root == oracle_has);
    }
}

TEST_CASE("fallback budget semantics") {
    // a triangle across levels 2 and 3 leaves every vertex with two
    // candidate dominators: unit propagation stalls and only the defensive
    // search can finish the root
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    SolveOutcome strict = solve_with_root(g, 0, {.fallback_budget = 0});
    CHECK(strict.verdict == SolveVerdict::give_up);
    CHECK(strict.stats.fallback_activations >= 1);

    SolveOutcome relaxed = solve_with_root(g, 0);
    CHECK(relaxed.verdict != SolveVerdict::give_up);
    CHECK(relaxed.stats.fallback_activations >= 1);
    bool oracle_has_root = false;
    for (const auto& sol : enumerate_eds(g))
        if (std::find(sol.begin(), sol.end(), 0) != sol.end()) oracle_has_root = true;
    CHECK(relaxed.found() == oracle_has_root);

    SolveOutcome full = solve(g);
    CHECK(full.found() == solve_exact(g).has_value());
}

TEST_CASE("structural audit reports a witness on planted violations") {
    // two level-3 support vertices whose level-2 feet share a level-1
    // neighbor: the input contains the forbidden pattern
    Graph g = build_graph(10, {{0, 1},
                               {0, 2},
                               {0, 3},
                               {1, 4},
                               {1, 5},
                               {2, 4},
                               {3, 5},
                               {4, 6},
                               {5, 7},
                               {6, 8},
                               {7, 9}});
    CHECK(is_s133_free_bipartite(g).verdict == ClassVerdict::no);

    SolveOutcome out = solve_with_root(g, 0, {.debug_checks = true});
    REQUIRE(out.found());
    CHECK(out.solution == std::vector<int>{0, 6, 7});
    REQUIRE(out.witness.has_value());
    CHECK(verify_pattern_witness(g, PatternSpec::s133(), *out.witness));
    CHECK(trace_contains(out, "structural audit"));
}

TEST_CASE("class corpus: no fallback, polynomial node counts, shallow recursion") {
    std::mt19937_64 rng(4321);
    int corpus = 0;
    for (int round = 0; round < 2000 && corpus < 400; ++round) {
        int n = 4 + int(rng() % 11);
        Graph g = random_bipartite(n / 2, n - n / 2, 0.3 + 0.04 * double(round % 10), rng());
        if (is_s133_free_bipartite(g).verdict != ClassVerdict::yes) continue;
        ++corpus;
        SolveOutcome out = solve(g, {.assume_class = true});
        CHECK(out.stats.fallback_activations == 0);
        CHECK(out.stats.nodes <= 3LL * g.n * g.n * g.n);
        CHECK(out.found() == solve_exact(g).has_value());

        // recursion depth against the diameter bound
        int diam = 0;
        for (const auto& comp : components(g)) {
            InducedSubgraph sub = induced_subgraph(g, comp);
            for (int v = 0; v < sub.graph.n; ++v)
                diam = std::max(diam, distance_levels(sub.graph, v).deepest());
        }
        CHECK(out.stats.max_depth <= (diam + 2) / 3 + 1);
    }
    CHECK(corpus == 400);
}

TEST_CASE("crosscheck harness agrees in both modes") {
    CrosscheckParams cls;
    cls.count = 200;
    cls.max_n = 12;
    cls.seed = 99;
    CrosscheckReport rep = run_crosscheck(cls);
    CHECK(rep.checked == 200);
    CHECK(rep.all_agree());
    CHECK(rep.fallback_activations == 0);

    CrosscheckParams open;
    open.count = 200;
    open.max_n = 12;
    open.seed = 100;
    open.class_members_only = false;
    open.solver_checks_class = false;
    CrosscheckReport rep2 = run_crosscheck(open);
    CHECK(rep2.checked == 200);
    CHECK(rep2.all_agree());

    CrosscheckParams zero;
    zero.count = 0;
    CHECK(run_crosscheck(zero).checked == 0);

    // worker count must not change the verdicts
    CrosscheckParams par = cls;
    par.jobs = 4;
    CrosscheckReport rep3 = run_crosscheck(par);
    CHECK(rep3.checked == rep.checked);
    CHECK(rep3.agree == rep.agree);
    CHECK(rep3.fallback_activations == rep.fallback_activations);
}
