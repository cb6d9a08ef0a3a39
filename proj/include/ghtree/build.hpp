#ifndef GHTREE_BUILD_HPP
#define GHTREE_BUILD_HPP

#include <span>
#include <vector>

#include "ghtree/decomposition.hpp"
#include "ghtree/gomory_hu.hpp"
#include "ghtree/graph.hpp"
#include "ghtree/hypergraph.hpp"

namespace ghtree {

struct build_options {
    std::uint64_t seed = 1;
    bool use_classic = false;
    engine_config config{};
};

struct build_result {
    gomory_hu_tree tree;
    run_stats stats;
};

/// Builds the Gomory-Hu tree over the given terminals (empty = all vertices).
/// Disconnected inputs are split into components, one tree per component,
/// joined by 0-weight edges. The result is validated before returning: every
/// tree edge's preimage side is recomputed as a cut of exactly the edge's
/// weight; on a validation failure the construction retries with a fresh
/// stream and eventually surfaces a randomized_failure.
build_result build_gomory_hu_tree(const weighted_graph& g, std::vector<vertex_id> terminals = {},
                                  const build_options& opt = {});
build_result build_gomory_hu_tree(const hypergraph& h, std::vector<vertex_id> terminals = {},
                                  const build_options& opt = {});

/// Cut value of the f-preimage side of every tree edge, in edge order.
std::vector<weight_t> tree_edge_cut_values(const weighted_graph& g, const gomory_hu_tree& t);
std::vector<weight_t> tree_edge_cut_values(const hypergraph& h, const gomory_hu_tree& t);

}  // namespace ghtree

#endif
