#include <doctest.h>

#include "fixtures.hpp"
#include "ghtree/build.hpp"
#include "ghtree/oracle.hpp"

using namespace ghtree;
using namespace ghtest;

TEST_CASE("all_pairs_mincut on the fixtures") {
    const auto bridge_table = all_pairs_mincut(two_triangle_bridge());
    for (vertex_id u = 0; u < 6; ++u)
        for (vertex_id v = u + 1; v < 6; ++v) {
            const bool same_triangle = (u < 3) == (v < 3);
            CHECK(bridge_table[u][v] == (same_triangle ? 2 : 1));
        }

    const auto path_table = all_pairs_mincut(path32());
    CHECK(path_table[0][1] == 3);
    CHECK(path_table[0][2] == 2);
    CHECK(path_table[1][2] == 2);

    const auto k4_table = all_pairs_mincut(k4());
    for (vertex_id u = 0; u < 4; ++u)
        for (vertex_id v = u + 1; v < 4; ++v) CHECK(k4_table[u][v] == 3);
}

TEST_CASE("all_pairs_mincut refuses instances over the cap") {
    engine_config cfg;
    cfg.oracle_maxflow_cap = 8;
    CHECK_THROWS_AS(all_pairs_mincut(random_gnp(9, 0.3, 2, 1), cfg), oracle_refused_error);
}

TEST_CASE("enumerate_mincut agrees with the oracle solver everywhere both run") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = random_gnp(8, 0.4, 4, seed, seed % 2 == 0);
        for (vertex_id s = 0; s < 8; ++s)
            for (vertex_id t = s + 1; t < 8; ++t) {
                const auto [value, side] = enumerate_mincut(g, s, t);
                REQUIRE(value == oracle_maxflow(g, s, t).value);
                REQUIRE(g.cut_value(side) == value);
            }
    }
}

TEST_CASE("enumerate_mincut tie-breaking picks the smallest side") {
    const auto g = path32();
    const auto [value, side] = enumerate_mincut(g, 0, 2);
    CHECK(value == 2);
    CHECK(side == std::vector<vertex_id>{0, 1});
    const auto [rvalue, rside] = enumerate_mincut(g, 2, 0);
    CHECK(rvalue == 2);
    CHECK(rside == std::vector<vertex_id>{2});
}

TEST_CASE("enumerate_lambda_table matches pairwise enumeration") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto g = random_gnp(8, 0.45, 3, seed);
        const auto table = enumerate_lambda_table(g);
        const auto edges = edge_list(g);
        for (vertex_id s = 0; s < 8; ++s)
            for (vertex_id t = s + 1; t < 8; ++t)
                REQUIRE(table[s][t] == brute_min_cut(8, edges, s, t));
    }
    CHECK_THROWS_AS(enumerate_lambda_table(random_gnp(15, 0.3, 2, 1)), oracle_refused_error);
}

TEST_CASE("verify_ghtree certifies a correct tree") {
    const auto g = two_triangle_bridge();
    const auto [tree, stats] = build_gomory_hu_tree(g);
    const auto report = verify_ghtree(g, tree.terminals, tree);
    CHECK(report.certified());
    CHECK(report.pairs_checked == 15);
}

TEST_CASE("verify_ghtree flags an inflated edge weight") {
    const auto g = two_triangle_bridge();
    auto [tree, stats] = build_gomory_hu_tree(g);
    REQUIRE(!tree.edges.empty());
    tree.edges[0].w += 1;
    const auto report = verify_ghtree(g, tree.terminals, tree);
    CHECK(!report.certified());
    CHECK(!report.edge_mismatches.empty());
    CHECK(!report.value_mismatches.empty());
}

TEST_CASE("verify_ghtree flags a broken vertex map") {
    const auto g = two_triangle_bridge();
    auto [tree, stats] = build_gomory_hu_tree(g);
    tree.f[3] = invalid_vertex;
    const auto report = verify_ghtree(g, tree.terminals, tree);
    CHECK(!report.certified());
    CHECK(!report.map_violations.empty());
}

TEST_CASE("verify_ghtree reports oracle refusal but still checks certificates") {
    const auto g = random_gnp(20, 0.3, 3, 2);
    const auto [tree, stats] = build_gomory_hu_tree(g);
    engine_config cfg;
    cfg.oracle_maxflow_cap = 10;
    const auto report = verify_ghtree(g, tree.terminals, tree, cfg);
    CHECK(report.oracle_refused);
    CHECK(report.clean());
    CHECK(!report.certified());
    CHECK(report.edge_mismatches.empty());
}

TEST_CASE("verify_ghtree works for hypergraphs") {
    const auto h = h1();
    const auto [tree, stats] = build_gomory_hu_tree(h);
    CHECK(verify_ghtree(h, tree.terminals, tree).certified());
}

TEST_CASE("connectivity_classes reads classes off a lambda table") {
    const auto table = enumerate_lambda_table(two_triangle_bridge());
    std::vector<vertex_id> terms{0, 1, 2, 3, 4, 5};
    const auto at2 = connectivity_classes(table, terms, 2);
    REQUIRE(at2.size() == 2);
    CHECK(at2[0] == std::vector<vertex_id>{0, 1, 2});
    CHECK(at2[1] == std::vector<vertex_id>{3, 4, 5});
    const auto at1 = connectivity_classes(table, terms, 1);
    REQUIRE(at1.size() == 1);
}
