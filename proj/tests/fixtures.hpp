#ifndef GHTREE_TESTS_FIXTURES_HPP
#define GHTREE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "ghtree/gen.hpp"
#include "ghtree/graph.hpp"
#include "ghtree/hypergraph.hpp"

namespace ghtest {

using ghtree::edge;
using ghtree::hyperedge;
using ghtree::hypergraph;
using ghtree::vertex_id;
using ghtree::weight_t;
using ghtree::weighted_graph;

// ---- fixtures ----

// a=0, b=1, c=2; unit weights
inline weighted_graph triangle() {
    return weighted_graph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
}

// a-b weight 3, b-c weight 2
inline weighted_graph path32() {
    return weighted_graph(3, {{0, 1, 3}, {1, 2, 2}});
}

// unit triangles {0,1,2} and {3,4,5} joined by the bridge (2,3)
inline weighted_graph two_triangle_bridge() {
    return weighted_graph(
        6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}, {2, 3, 1}});
}

inline weighted_graph k4() {
    return weighted_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

// center 0, leaves 1..3, unit weights
inline weighted_graph star4() {
    return weighted_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
}

inline weighted_graph grid3x3() {
    ghtree::gen_params p;
    p.rows = p.cols = 3;
    return std::get<weighted_graph>(ghtree::generate_instance("grid", p, 0));
}

// V={a,b,c,d}={0,1,2,3}; unit hyperedges {a,b,c}, {b,c,d}, {a,d}
inline hypergraph h1() {
    return hypergraph(4, {{{0, 1, 2}, 1}, {{1, 2, 3}, 1}, {{0, 3}, 1}});
}

inline weighted_graph random_gnp(std::size_t n, double density, weight_t wmax, std::uint64_t seed,
                                 bool connected = true) {
    ghtree::gen_params p;
    p.n = n;
    p.density = density;
    p.weight_min = 1;
    p.weight_max = wmax;
    p.ensure_connected = connected;
    return std::get<weighted_graph>(ghtree::generate_instance("gnp", p, seed));
}

// ---- test-side brute force, independent of the library's solvers ----

inline weight_t brute_cut_of_mask(std::size_t n, const std::vector<edge>& edges, std::uint32_t mask) {
    (void)n;
    weight_t value = 0;
    for (const edge& e : edges) {
        const bool iu = (mask >> e.u) & 1u, iv = (mask >> e.v) & 1u;
        if (iu != iv) value += e.w;
    }
    return value;
}

// minimum over all subsets containing s and excluding t
inline weight_t brute_min_cut(std::size_t n, const std::vector<edge>& edges, vertex_id s, vertex_id t) {
    weight_t best = std::numeric_limits<weight_t>::max();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!((mask >> s) & 1u) || ((mask >> t) & 1u)) continue;
        best = std::min(best, brute_cut_of_mask(n, edges, mask));
    }
    return best;
}

inline weight_t brute_hyper_cut_of_mask(const std::vector<hyperedge>& edges, std::uint32_t mask) {
    weight_t value = 0;
    for (const hyperedge& e : edges) {
        bool has_in = false, has_out = false;
        for (vertex_id v : e.members) ((mask >> v) & 1u ? has_in : has_out) = true;
        if (has_in && has_out) value += e.w;
    }
    return value;
}

inline weight_t brute_hyper_min_cut(std::size_t n, const std::vector<hyperedge>& edges, vertex_id s,
                                    vertex_id t) {
    weight_t best = std::numeric_limits<weight_t>::max();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!((mask >> s) & 1u) || ((mask >> t) & 1u)) continue;
        best = std::min(best, brute_hyper_cut_of_mask(edges, mask));
    }
    return best;
}

inline std::vector<edge> edge_list(const weighted_graph& g) {
    return {g.edges().begin(), g.edges().end()};
}

inline std::vector<hyperedge> hyperedge_list(const hypergraph& h) {
    return {h.edges().begin(), h.edges().end()};
}

}  // namespace ghtest

#endif
