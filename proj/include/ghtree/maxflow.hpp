#ifndef GHTREE_MAXFLOW_HPP
#define GHTREE_MAXFLOW_HPP

#include <span>
#include <vector>

#include "ghtree/graph.hpp"
#include "ghtree/types.hpp"

namespace ghtree {

/// Value of an (s,t)-maxflow plus the inclusion-minimal mincut side that
/// contains s (the vertices residually reachable from s).
struct flow_result {
    weight_t value = 0;
    std::vector<vertex_id> min_source_side;  // sorted
};

/// Primary solver (blocking flow).
flow_result maxflow(const weighted_graph& g, vertex_id s, vertex_id t, flow_counter* counter = nullptr);

/// True iff the (s,t)-maxflow value reaches `threshold`; stops routing flow
/// as soon as the threshold is met.
bool maxflow_at_least(const weighted_graph& g, vertex_id s, vertex_id t, weight_t threshold,
                      flow_counter* counter = nullptr);

/// Independent oracle solver (shortest augmenting path); same contract.
flow_result oracle_maxflow(const weighted_graph& g, vertex_id s, vertex_id t, flow_counter* counter = nullptr);

/// Maxflow between two disjoint nonempty vertex sets, treating each as a
/// single endpoint. Equivalent to contracting both sets, without
/// materializing the quotient. min_source_side contains all of `sources`.
flow_result maxflow_between_sets(const weighted_graph& g, std::span<const vertex_id> sources,
                                 std::span<const vertex_id> sinks, flow_counter* counter = nullptr);

/// Maxflow from `group` to everything outside `region` (region given as a
/// 0/1 mask over vertices, group inside it). All vertices outside the region
/// act as one contracted sink. min_source_side is a subset of the region.
flow_result maxflow_isolated(const weighted_graph& g, std::span<const vertex_id> group,
                             const std::vector<char>& region_mask, flow_counter* counter = nullptr);

}  // namespace ghtree

#endif
