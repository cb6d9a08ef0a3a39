#include <doctest.h>

#include <numeric>

#include <sstream>

#include "fixtures.hpp"
#include "ghtree/build.hpp"
#include "ghtree/isolating_cuts.hpp"
#include "ghtree/oracle.hpp"

using namespace ghtree;
using namespace ghtest;

namespace {

hypergraph random_hyper(std::size_t n, std::size_t m, std::uint64_t seed) {
    gen_params p;
    p.n = n;
    p.edges = m;
    p.arity_min = 2;
    p.arity_max = 4;
    p.ensure_connected = true;
    return std::get<hypergraph>(generate_instance("hyper-random", p, seed));
}

}  // namespace

TEST_CASE("hypergraph cut values on the h1 fixture") {
    const auto h = h1();
    CHECK(h.cut_value(std::vector<vertex_id>{0}) == 2);
    CHECK(h.cut_value(std::vector<vertex_id>{0, 3}) == 2);
    CHECK(h.cut_value(std::vector<vertex_id>{0, 1}) == 3);
    CHECK_THROWS_AS(h.cut_value(std::vector<vertex_id>{}), invalid_input_error);
    CHECK_THROWS_AS(h.cut_value(std::vector<vertex_id>{0, 1, 2, 3}), invalid_input_error);
}

TEST_CASE("hypergraph construction validates input") {
    CHECK_THROWS_AS(hypergraph(3, {{{0}, 1}}), invalid_input_error);
    CHECK_THROWS_AS(hypergraph(3, {{{0, 0, 1}, 1}}), invalid_input_error);
    CHECK_THROWS_AS(hypergraph(3, {{{0, 5}, 1}}), invalid_input_error);
    CHECK_THROWS_AS(hypergraph(3, {{{0, 1}, 0}}), invalid_input_error);
    // duplicate hyperedges merge
    hypergraph h(3, {{{0, 1}, 1}, {{1, 0}, 2}});
    REQUIRE(h.edge_count() == 1);
    CHECK(h.edges()[0].w == 3);
    CHECK(h.size_measure() == 2);
}

TEST_CASE("hypergraph maxflow matches enumeration on h1") {
    const auto h = h1();
    CHECK(brute_hyper_min_cut(4, hyperedge_list(h), 0, 3) == 2);
    CHECK(maxflow(h, 0, 3).value == 2);
    CHECK(brute_hyper_min_cut(4, hyperedge_list(h), 0, 1) == 2);
    CHECK(maxflow(h, 0, 1).value == 2);
    hypergraph single(2, {{{0, 1}, 1}});
    CHECK(maxflow(single, 0, 1).value == 1);
    CHECK(oracle_maxflow(h, 0, 3).value == 2);
}

TEST_CASE("hypergraph maxflow side is a real cut of the returned value") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto h = random_hyper(9, 9, seed);
        const auto edges = hyperedge_list(h);
        for (vertex_id t = 1; t < h.vertex_count(); ++t) {
            const auto r = maxflow(h, 0, t);
            REQUIRE(h.cut_value(r.min_source_side) == r.value);
            REQUIRE(r.value == brute_hyper_min_cut(h.vertex_count(), edges, 0, t));
        }
    }
}

TEST_CASE("hypergraph contraction commutes with cut values") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto h = random_hyper(8, 8, seed);
        rng_handle rng(seed * 3);
        std::vector<std::vector<vertex_id>> parts(1);
        for (vertex_id v = 0; v < h.vertex_count(); ++v)
            if (rng.below(2) == 0) parts[0].push_back(v);
        if (parts[0].size() < 2 || parts[0].size() >= h.vertex_count() - 1) continue;
        const auto [q, map] = h.contract(parts);
        if (q.vertex_count() < 2) continue;
        for (vertex_id qv = 0; qv < q.vertex_count(); ++qv) {
            std::vector<vertex_id> qside{qv};
            REQUIRE(q.cut_value(qside) == h.cut_value(map.pull_back(qside)));
        }
    }
}

TEST_CASE("cut function is submodular on random hypergraphs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto h = random_hyper(8, 7, seed);
        rng_handle rng(seed * 11);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<vertex_id> a, b, both, either;
            for (vertex_id v = 0; v < h.vertex_count(); ++v) {
                const bool in_a = rng.below(2) == 0, in_b = rng.below(2) == 0;
                if (in_a) a.push_back(v);
                if (in_b) b.push_back(v);
                if (in_a && in_b) both.push_back(v);
                if (in_a || in_b) either.push_back(v);
            }
            auto proper = [&](const std::vector<vertex_id>& s) {
                return !s.empty() && s.size() < h.vertex_count();
            };
            if (!proper(a) || !proper(b) || !proper(both) || !proper(either)) continue;
            REQUIRE(h.cut_value(a) + h.cut_value(b) >=
                    h.cut_value(either) + h.cut_value(both));
        }
    }
}

TEST_CASE("hypergraph isolating cuts") {
    const auto h = h1();
    std::vector<std::vector<vertex_id>> groups{{0}, {3}};
    const auto cuts = compute_isolating_cuts(h, groups);
    REQUIRE(cuts.size() == 2);
    CHECK(cuts[0].value == 2);
    CHECK(cuts[1].value == 2);
    CHECK(!std::binary_search(cuts[0].side.begin(), cuts[0].side.end(), vertex_id{3}));

    // three pendant hyperedges off a hub isolate each leaf at value 1
    hypergraph star(4, {{{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}});
    std::vector<std::vector<vertex_id>> leaves{{1}, {2}, {3}};
    for (const auto& c : compute_isolating_cuts(star, leaves)) {
        CHECK(c.value == 1);
        CHECK(c.side.size() == 1);
    }

    CHECK_THROWS_AS(compute_isolating_cuts(h, std::vector<std::vector<vertex_id>>{{0}}),
                    invalid_input_error);
}

TEST_CASE("hypergraph tree of h1 answers 2 for every pair") {
    const auto h = h1();
    const auto [tree, stats] = build_gomory_hu_tree(h);
    const auto values = tree_all_pairs_values(tree);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) REQUIRE(values[i][j] == 2);
}

TEST_CASE("2-uniform hypergraphs agree with the graph pipeline") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto g = random_gnp(12, 0.35, 3, seed);
        std::vector<hyperedge> hedges;
        for (const auto& e : g.edges()) hedges.push_back({{e.u, e.v}, e.w});
        const hypergraph h(g.vertex_count(), hedges);
        // operations agree exactly
        for (vertex_id t = 1; t < 5; ++t) {
            CHECK(maxflow(h, 0, t).value == maxflow(g, 0, t).value);
            CHECK(maxflow(h, 0, t).min_source_side == maxflow(g, 0, t).min_source_side);
        }
        CHECK(h.as_graph().edge_count() == g.edge_count());
        build_options opt;
        opt.seed = seed;
        const auto [ht, s1] = build_gomory_hu_tree(h, {}, opt);
        const auto [gt, s2] = build_gomory_hu_tree(g, {}, opt);
        REQUIRE(tree_all_pairs_values(ht) == tree_all_pairs_values(gt));
    }
}

TEST_CASE("hypergraph tree with a single terminal") {
    const auto h = h1();
    const auto [tree, stats] = build_gomory_hu_tree(h, {2});
    CHECK(tree.terminals == std::vector<vertex_id>{2});
    CHECK(tree.edges.empty());
}

TEST_CASE("hypergraph trees match enumeration on random instances") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto h = random_hyper(8, 8, seed);
        build_options opt;
        opt.seed = seed + 100;
        const auto [tree, stats] = build_gomory_hu_tree(h, {}, opt);
        const auto values = tree_all_pairs_values(tree);
        const auto edges = hyperedge_list(h);
        for (std::size_t i = 0; i < tree.terminals.size(); ++i)
            for (std::size_t j = i + 1; j < tree.terminals.size(); ++j)
                REQUIRE(values[i][j] ==
                        brute_hyper_min_cut(h.vertex_count(), edges, tree.terminals[i], tree.terminals[j]));
    }
}

TEST_CASE("disconnected hypergraphs get zero-weight joints") {
    hypergraph h(7, {{{0, 1, 2}, 1}, {{4, 5, 6}, 1}, {{4, 6}, 1}});
    const auto [tree, stats] = build_gomory_hu_tree(h);
    REQUIRE(tree.edges.size() == 6);
    const auto values = tree_all_pairs_values(tree);
    CHECK(values[0][3] == 0);  // isolated vertex
    CHECK(values[0][4] == 0);  // across components
    CHECK(values[4][6] == 2);  // two hyperedges join 4 and 6
    CHECK(verify_ghtree(h, tree.terminals, tree).certified());
}

TEST_CASE("hypergraph io round trip") {
    const auto h = random_hyper(8, 9, 5);
    std::ostringstream out1;
    write_hypergraph(out1, h);
    std::istringstream in(out1.str());
    const auto back = read_hypergraph(in);
    std::ostringstream out2;
    write_hypergraph(out2, back);
    CHECK(out1.str() == out2.str());
    CHECK(back.size_measure() == h.size_measure());
}
