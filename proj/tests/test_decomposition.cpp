#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "ghtree/decomposition.hpp"

using namespace ghtree;
using namespace ghtest;

namespace {

std::vector<vertex_id> all_vertices(const weighted_graph& g) {
    std::vector<vertex_id> out(g.vertex_count());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

}  // namespace

TEST_CASE("balanced decomposition on the bridge returns only the triangle sides") {
    const auto g = two_triangle_bridge();
    const auto active = all_vertices(g);
    const std::vector<vertex_id> left{0, 1, 2}, right{3, 4, 5};
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        rng_handle rng(seed);
        const auto cuts = balanced_decomposition(g, active, 2, rng);
        for (const auto& c : cuts) {
            const bool is_left = c.side == left, is_right = c.side == right;
            REQUIRE((is_left || is_right));
            REQUIRE(c.value == 1);
        }
    }
}

TEST_CASE("balanced decomposition on the triangle never returns a set at tau=2") {
    const auto g = triangle();
    const auto active = all_vertices(g);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        rng_handle rng(seed);
        CHECK(balanced_decomposition(g, active, 2, rng).empty());
    }
}

TEST_CASE("balanced decomposition returns empty when fewer than two vertices sample") {
    const auto g = path32();
    const std::vector<vertex_id> active{0, 2};
    bool saw_guard = false;
    for (std::uint64_t seed = 1; seed <= 30 && !saw_guard; ++seed) {
        rng_handle rng(seed);
        flow_counter counter;
        const auto cuts = balanced_decomposition(g, active, 100, rng, &counter);
        if (counter.calls.load() == 0) {
            CHECK(cuts.empty());
            saw_guard = true;
        }
    }
    CHECK(saw_guard);
}

TEST_CASE("balanced decomposition rejects tiny active sets") {
    const auto g = triangle();
    rng_handle rng(1);
    CHECK_THROWS_AS(balanced_decomposition(g, std::vector<vertex_id>{0}, 2, rng), invalid_input_error);
}

TEST_CASE("balanced decomposition output always satisfies both filters") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto g = random_gnp(11, 0.35, 4, seed);
        const auto active = all_vertices(g);
        rng_handle rng(seed * 13);
        const weight_t tau = 1 + static_cast<weight_t>(seed % 6);
        const auto cuts = balanced_decomposition(g, active, tau, rng);
        std::vector<char> seen(g.vertex_count(), 0);
        for (const auto& c : cuts) {
            REQUIRE(c.value < tau);
            REQUIRE(c.value == g.cut_value(c.side));
            std::size_t inside = 0;
            for (vertex_id v : c.side) {
                REQUIRE(!seen[v]);
                seen[v] = 1;
                inside += std::binary_search(active.begin(), active.end(), v) ? 1 : 0;
            }
            REQUIRE(2 * inside <= active.size());
        }
    }
}

TEST_CASE("detect_large_cc on the bridge") {
    const auto g = two_triangle_bridge();
    SUBCASE("whole vertex set at tau=2 has no majority component") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            rng_handle rng(seed);
            CHECK(detect_large_cc(g, all_vertices(g), 2, rng).empty());
        }
    }
    SUBCASE("four terminals at tau=2 find the left triangle") {
        const std::vector<vertex_id> terms{0, 1, 2, 3};
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            rng_handle rng(seed);
            CHECK(detect_large_cc(g, terms, 2, rng) == std::vector<vertex_id>{0, 1, 2});
        }
    }
    SUBCASE("tau=1 keeps everything on a connected graph") {
        rng_handle rng(7);
        CHECK(detect_large_cc(g, all_vertices(g), 1, rng) == all_vertices(g));
    }
}

TEST_CASE("nonempty detect_large_cc answers are pairwise tau-connected") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto g = random_gnp(9, 0.4, 3, seed);
        const auto edges = edge_list(g);
        rng_handle rng(seed * 31);
        for (weight_t tau = 1; tau <= 4; ++tau) {
            const auto comp = detect_large_cc(g, all_vertices(g), tau, rng);
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (std::size_t j = i + 1; j < comp.size(); ++j)
                    REQUIRE(brute_min_cut(g.vertex_count(), edges, comp[i], comp[j]) >= tau);
        }
    }
}

TEST_CASE("per-round shrink of the active remainder is substantial") {
    const auto g = two_triangle_bridge();
    const std::vector<vertex_id> terms{0, 1, 2, 3};  // majority component {0,1,2}
    std::size_t removed = 0;
    const std::size_t trials = 200;
    for (std::uint64_t seed = 1; seed <= trials; ++seed) {
        rng_handle rng(seed);
        const auto cuts = balanced_decomposition(g, terms, 2, rng);
        for (const auto& c : cuts)
            if (std::binary_search(c.side.begin(), c.side.end(), vertex_id{3})) ++removed;
    }
    // |A \ C0| = 1; the mean one-round shrink must clear a 1/(4 log2 n) floor
    const double floor = 1.0 / (4.0 * std::log2(6.0));
    CHECK(static_cast<double>(removed) / trials >= floor);
}

TEST_CASE("nonempty detect answers persist at every smaller tau") {
    const auto g = two_triangle_bridge();
    const std::vector<vertex_id> terms{0, 1, 2, 3};
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        rng_handle rng(seed);
        // tau=2 succeeds on this fixture, so tau=1 must as well
        const auto at2 = detect_large_cc(g, terms, 2, rng);
        const auto at1 = detect_large_cc(g, terms, 1, rng);
        REQUIRE(!at2.empty());
        REQUIRE(!at1.empty());
        REQUIRE(at1.size() >= at2.size());
    }
}

TEST_CASE("find_threshold on the fixtures") {
    SUBCASE("bridge, all terminals") {
        const auto g = two_triangle_bridge();
        rng_handle rng(5);
        const auto r = find_threshold(g, all_vertices(g), rng);
        CHECK(r.tau == 1);
        CHECK(r.component_terminals == all_vertices(g));
    }
    SUBCASE("bridge, four terminals") {
        const auto g = two_triangle_bridge();
        const std::vector<vertex_id> terms{0, 1, 2, 3};
        rng_handle rng(5);
        const auto r = find_threshold(g, terms, rng);
        CHECK(r.tau == 2);
        CHECK(r.component_terminals == std::vector<vertex_id>{0, 1, 2});
    }
    SUBCASE("K4") {
        const auto g = k4();
        rng_handle rng(5);
        const auto r = find_threshold(g, all_vertices(g), rng);
        CHECK(r.tau == 3);
        CHECK(r.component_terminals == all_vertices(g));
    }
}

TEST_CASE("find_threshold requires a connected instance and two terminals") {
    weighted_graph disconnected(4, {{0, 1, 1}, {2, 3, 1}});
    rng_handle rng(1);
    CHECK_THROWS_AS(find_threshold(disconnected, std::vector<vertex_id>{0, 1, 2, 3}, rng),
                    invalid_input_error);
    CHECK_THROWS_AS(find_threshold(triangle(), std::vector<vertex_id>{0}, rng), invalid_input_error);
}

TEST_CASE("identical seeds give identical decompositions") {
    const auto g = random_gnp(14, 0.3, 5, 77);
    const auto active = all_vertices(g);
    for (std::uint64_t seed : {1ull, 9ull, 123ull}) {
        rng_handle a(seed), b(seed);
        const auto ca = balanced_decomposition(g, active, 3, a);
        const auto cb = balanced_decomposition(g, active, 3, b);
        REQUIRE(ca.size() == cb.size());
        for (std::size_t i = 0; i < ca.size(); ++i) {
            CHECK(ca[i].side == cb[i].side);
            CHECK(ca[i].value == cb[i].value);
        }
    }
}
