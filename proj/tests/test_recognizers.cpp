#include <doctest.h>

#include <random>

#include "eds/generate.hpp"
#include "eds/recognizers.hpp"

using namespace eds;

namespace {

Graph spider_graph() {
    // S_{1,3,3}: midpoint 0, legs [1], [2,3,4], [5,6,7]
    return build_graph(8, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}});
}

Graph random_any(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (double(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

// independent induced-path check used to cross-validate degenerate specs
bool has_induced_path(const Graph& g, int k) {
    if (k <= 0) return true;
    std::vector<int> path;
    Bitset used(g.n);
    auto rec = [&](auto&& self) -> bool {
        if (int(path.size()) == k) return true;
        for (int v = 0; v < g.n; ++v) {
            if (used.test(v)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < path.size(); ++i) {
                bool adjacent = g.has_edge(path[i], v);
                bool want = i + 1 == path.size();
                if (adjacent != want) ok = false;
            }
            if (!ok) continue;
            path.push_back(v);
            used.set(v);
            if (self(self)) return true;
            path.pop_back();
            used.reset(v);
        }
        return false;
    };
    return rec(rec);
}

}  // namespace

TEST_CASE("the pattern contains itself") {
    Graph g = spider_graph();
    auto w = find_induced_spider(g, PatternSpec::s133());
    REQUIRE(w.has_value());
    CHECK(w->midpoint == 0);
    CHECK(g.degree(w->midpoint) == 3);
    CHECK(verify_pattern_witness(g, PatternSpec::s133(), *w));
}

TEST_CASE("paths and even cycles carry no copy of the pattern") {
    for (int k = 1; k <= 16; ++k)
        CHECK(!find_induced_spider(make_path(k), PatternSpec::s133()).has_value());
    for (int k = 2; k <= 9; ++k)
        CHECK(!find_induced_spider(make_cycle(2 * k), PatternSpec::s133()).has_value());
}

TEST_CASE("class membership verdicts") {
    CHECK(is_s133_free_bipartite(make_path(13)).verdict == ClassVerdict::yes);
    CHECK(is_s133_free_bipartite(make_cycle(5)).verdict == ClassVerdict::not_bipartite);

    // planted pattern plus an isolated vertex
    Graph planted = build_graph(
        9, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}});
    ClassCheck check = is_s133_free_bipartite(planted);
    REQUIRE(check.verdict == ClassVerdict::no);
    REQUIRE(check.witness.has_value());
    CHECK(verify_pattern_witness(planted, PatternSpec::s133(), *check.witness));
}

TEST_CASE("anchored search agrees with the subset oracle") {
    std::mt19937_64 seeds(2024);
    int found = 0;
    for (int round = 0; round < 400; ++round) {
        int n = 8 + int(seeds() % 5);
        Graph g = random_any(n, 0.25 + 0.05 * double(round % 7), seeds());
        auto fast = find_induced_spider(g, PatternSpec::s133());
        auto brute = find_induced_spider_brute(g, PatternSpec::s133());
        CHECK(fast.has_value() == brute.has_value());
        if (fast) {
            ++found;
            CHECK(verify_pattern_witness(g, PatternSpec::s133(), *fast));
            CHECK(verify_pattern_witness(g, PatternSpec::s133(), *brute));
        }
    }
    CHECK(found > 0);  // the corpus exercised both answers
}

TEST_CASE("degenerate leg lengths find induced paths") {
    std::mt19937_64 seeds(77);
    for (int round = 0; round < 120; ++round) {
        int n = 5 + int(seeds() % 6);
        Graph g = random_any(n, 0.3, seeds());
        for (int k = 2; k <= 6; ++k) {
            PatternSpec spec{{0, 0, k - 1}};
            auto w = find_induced_spider(g, spec);
            CHECK(w.has_value() == has_induced_path(g, k));
            if (w) CHECK(verify_pattern_witness(g, spec, *w));
        }
    }
}

TEST_CASE("anchored level path: found on the middle of a long path") {
    Graph p13 = make_path(13);
    DistanceLevels lv = distance_levels(p13, 6);
    auto p8 = find_anchored_p8(p13, lv);
    REQUIRE(p8.has_value());
    // the two level-1 vertices are 5 and 7; each r_i sits in its level
    CHECK(((p8->s1 == 5 && p8->r[0] == 7) || (p8->s1 == 7 && p8->r[0] == 5)));
    for (int i = 0; i < 6; ++i) CHECK(lv.dist[p8->r[i]] == i + 1);
    CHECK(!p13.has_edge(p8->s1, p8->r[1]));
    // consecutive path edges
    CHECK(p13.has_edge(6, p8->r[0]));
    for (int i = 0; i + 1 < 6; ++i) CHECK(p13.has_edge(p8->r[i], p8->r[i + 1]));
}

TEST_CASE("anchored level path: absent without a second level-1 vertex") {
    Graph p7 = make_path(7);
    DistanceLevels lv = distance_levels(p7, 0);
    CHECK(!find_anchored_p8(p7, lv).has_value());
}

TEST_CASE("anchored level path: absent when level 6 is empty") {
    Graph c10 = make_cycle(10);
    DistanceLevels lv = distance_levels(c10, 0);
    CHECK(lv.deepest() == 5);
    CHECK(!find_anchored_p8(c10, lv).has_value());
}

TEST_CASE("anchored level path: present on long even cycles") {
    Graph c12 = make_cycle(12);
    DistanceLevels lv = distance_levels(c12, 0);
    auto p8 = find_anchored_p8(c12, lv);
    REQUIRE(p8.has_value());
    for (int i = 0; i < 6; ++i) CHECK(lv.dist[p8->r[i]] == i + 1);
    CHECK(!c12.has_edge(p8->s1, p8->r[1]));
}
