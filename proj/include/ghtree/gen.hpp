#ifndef GHTREE_GEN_HPP
#define GHTREE_GEN_HPP

#include <string>
#include <variant>

#include "ghtree/graph.hpp"
#include "ghtree/hypergraph.hpp"

namespace ghtree {

struct gen_params {
    std::size_t n = 0;
    std::size_t edges = 0;  // hyper-random: number of hyperedges
    double density = 0.0;   // gnp: per-pair edge probability
    weight_t weight_min = 1;
    weight_t weight_max = 1;
    std::size_t arity_min = 2;
    std::size_t arity_max = 3;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t extra_edges = 0;  // tree-plus-edges
    bool ensure_connected = false;
};

using generated_instance = std::variant<weighted_graph, hypergraph>;

/// Deterministic instance for (kind, params, seed). Kinds: gnp,
/// two-cliques-bridge, grid, tree-plus-edges, hyper-random. Connectivity, when
/// requested, is enforced by seeding the instance with a random spanning tree.
generated_instance generate_instance(const std::string& kind, const gen_params& params,
                                     std::uint64_t seed);

}  // namespace ghtree

#endif
