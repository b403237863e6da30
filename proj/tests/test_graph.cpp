#include <doctest.h>

#include <stdexcept>

#include "eds/generate.hpp"
#include "eds/graph.hpp"

using namespace eds;

TEST_CASE("build_graph basics") {
    Graph g = build_graph(1, {});
    CHECK(g.n == 1);
    CHECK(g.degree(0) == 0);

    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.edge_count() == 3);
    CHECK(p4.has_edge(1, 0));
    CHECK(!p4.has_edge(0, 2));

    CHECK_THROWS_AS(build_graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, {{0, 5}}), std::invalid_argument);
    // duplicates collapse
    Graph dup = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("bipartition") {
    Graph p4 = make_path(4);
    auto side = bipartition(p4);
    REQUIRE(side.has_value());
    CHECK((*side)[0] == 0);
    CHECK((*side)[1] == 1);
    CHECK((*side)[2] == 0);
    CHECK((*side)[3] == 1);

    CHECK(!bipartition(make_cycle(5)).has_value());

    auto c6 = bipartition(make_cycle(6));
    REQUIRE(c6.has_value());
    int zeros = 0;
    for (int c : *c6) zeros += c == 0;
    CHECK(zeros == 3);
}

TEST_CASE("distance levels on paths and cycles") {
    Graph p7 = make_path(7);
    DistanceLevels lv = distance_levels(p7, 0);
    CHECK(lv.deepest() == 6);
    for (int i = 1; i <= 6; ++i) {
        CHECK(lv.level(i).count() == 1);
        CHECK(lv.level(i).test(i));
    }
    CHECK(lv.unreachable.none());
    CHECK(lv.level(7).none());  // past the deepest level

    Graph c6 = make_cycle(6);
    DistanceLevels lc = distance_levels(c6, 2);
    CHECK(lc.level(1).count() == 2);
    CHECK(lc.level(2).count() == 2);
    CHECK(lc.level(3).count() == 1);
    CHECK(lc.deepest() == 3);
}

TEST_CASE("distance levels report unreachable vertices") {
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    DistanceLevels lv = distance_levels(g, 0);
    CHECK(lv.unreachable.to_vector() == std::vector<int>{3, 4, 5});
    CHECK(lv.dist[4] == -1);
}

TEST_CASE("components") {
    Graph two_p3 = build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    auto comps = components(two_p3);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4, 5});

    CHECK(components(make_cycle(12)).size() == 1);

    auto singletons = components(build_graph(3, {}));
    CHECK(singletons.size() == 3);
}

TEST_CASE("join and cojoin") {
    // complete bipartite K22: sides {0,1} and {2,3}
    Graph k22 = build_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(is_join(k22, Bitset::of(4, {0, 1}), Bitset::of(4, {2, 3})));

    // the two halves of a 2P3 have no contact
    Graph two_p3 = build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(is_cojoin(two_p3, Bitset::of(6, {0, 1, 2}), Bitset::of(6, {3, 4, 5})));

    // the sides of a path are not joined
    Graph p4 = make_path(4);
    CHECK(!is_join(p4, Bitset::of(4, {0, 2}), Bitset::of(4, {1, 3})));

    CHECK_THROWS_AS(is_join(p4, Bitset::of(4, {0, 1}), Bitset::of(4, {1, 2})),
                    std::invalid_argument);
}

TEST_CASE("induced subgraph keeps inner edges only") {
    Graph c6 = make_cycle(6);
    InducedSubgraph sub = induced_subgraph(c6, {0, 1, 2, 4});
    CHECK(sub.graph.n == 4);
    CHECK(sub.graph.edge_count() == 2);  // 0-1, 1-2 survive; 4 is isolated
    CHECK(sub.orig == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("bipartite layerings have no intra-level edges") {
    // exhaustive over a generated corpus, every root
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_bipartite(4, 4, 0.4, seed);
        for (int root = 0; root < g.n; ++root) {
            DistanceLevels lv = distance_levels(g, root);
            for (int i = 0; i <= lv.deepest(); ++i) {
                Bitset level = lv.level(i);
                level.for_each([&](int v) { CHECK(!g.adj[v].intersects(level)); });
            }
        }
    }
}

TEST_CASE("components of a disjoint union are the union of components") {
    Graph a = make_path(4);
    Graph b = make_cycle(5);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a.n; ++u)
        a.adj[u].for_each([&](int v) {
            if (u < v) edges.emplace_back(u, v);
        });
    for (int u = 0; u < b.n; ++u)
        b.adj[u].for_each([&](int v) {
            if (u < v) edges.emplace_back(a.n + u, a.n + v);
        });
    Graph both = build_graph(a.n + b.n, edges);
    auto comps = components(both);
    REQUIRE(comps.size() == components(a).size() + components(b).size());
    CHECK(comps[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(comps[1] == std::vector<int>{4, 5, 6, 7, 8});
}
