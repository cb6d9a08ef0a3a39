#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "ghtree/gen.hpp"

using namespace ghtree;

TEST_CASE("generation is deterministic per (kind, params, seed)") {
    gen_params p;
    p.n = 10;
    p.density = 0.4;
    p.weight_min = 1;
    p.weight_max = 5;
    p.ensure_connected = true;
    const auto a = std::get<weighted_graph>(generate_instance("gnp", p, 7));
    const auto b = std::get<weighted_graph>(generate_instance("gnp", p, 7));
    std::ostringstream sa, sb;
    write_graph(sa, a);
    write_graph(sb, b);
    CHECK(sa.str() == sb.str());
    const auto c = std::get<weighted_graph>(generate_instance("gnp", p, 8));
    std::ostringstream sc;
    write_graph(sc, c);
    CHECK(sa.str() != sc.str());
}

TEST_CASE("two-cliques-bridge at n=6 is the canonical bridge fixture") {
    gen_params p;
    p.n = 6;
    const auto g = std::get<weighted_graph>(generate_instance("two-cliques-bridge", p, 0));
    std::ostringstream got, want;
    write_graph(got, g);
    write_graph(want, ghtest::two_triangle_bridge());
    CHECK(got.str() == want.str());
}

TEST_CASE("hyper-random produces a consistent hypergraph") {
    gen_params p;
    p.n = 8;
    p.edges = 10;
    p.arity_min = 2;
    p.arity_max = 4;
    const auto h = std::get<hypergraph>(generate_instance("hyper-random", p, 1));
    CHECK(h.vertex_count() == 8);
    CHECK(h.edge_count() <= 10);  // duplicates merge
    std::uint64_t p_total = 0;
    for (const auto& e : h.edges()) {
        CHECK(e.members.size() >= 2);
        CHECK(e.members.size() <= 4);
        p_total += e.members.size();
    }
    CHECK(p_total == h.size_measure());
}

TEST_CASE("connectivity enforcement connects the instance") {
    gen_params p;
    p.n = 30;
    p.density = 0.02;
    p.ensure_connected = true;
    CHECK(std::get<weighted_graph>(generate_instance("gnp", p, 3)).is_connected());
    p.ensure_connected = false;
    p.density = 0.0;
    CHECK(!std::get<weighted_graph>(generate_instance("gnp", p, 3)).is_connected());

    gen_params hp;
    hp.n = 20;
    hp.edges = 3;
    hp.ensure_connected = true;
    CHECK(std::get<hypergraph>(generate_instance("hyper-random", hp, 3)).is_connected());
}

TEST_CASE("grid and tree-plus-edges shapes") {
    gen_params p;
    p.rows = 3;
    p.cols = 4;
    const auto g = std::get<weighted_graph>(generate_instance("grid", p, 0));
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 3 * 3 + 2 * 4);  // 17 grid edges

    gen_params tp;
    tp.n = 15;
    tp.extra_edges = 5;
    tp.weight_max = 4;
    const auto t = std::get<weighted_graph>(generate_instance("tree-plus-edges", tp, 2));
    CHECK(t.vertex_count() == 15);
    CHECK(t.edge_count() == 14 + 5);
    CHECK(t.is_connected());
}

TEST_CASE("unknown kinds and bad params are rejected") {
    gen_params p;
    p.n = 5;
    CHECK_THROWS_AS(generate_instance("mystery", p, 0), invalid_input_error);
    gen_params bad;
    bad.n = 5;
    bad.density = 1.5;
    CHECK_THROWS_AS(generate_instance("gnp", bad, 0), invalid_input_error);
    gen_params badw;
    badw.n = 5;
    badw.density = 0.5;
    badw.weight_min = 0;
    CHECK_THROWS_AS(generate_instance("gnp", badw, 0), invalid_input_error);
}
