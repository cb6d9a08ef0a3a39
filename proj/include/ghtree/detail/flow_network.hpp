#ifndef GHTREE_DETAIL_FLOW_NETWORK_HPP
#define GHTREE_DETAIL_FLOW_NETWORK_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "ghtree/types.hpp"

namespace ghtree::detail {

/// Blocking-flow (level graph) maxflow with current-arc advancing. Arcs are
/// stored in pairs i, i^1; an undirected edge is a pair with equal
/// capacities, a directed arc has reverse capacity 0.
class dinic_network {
public:
    explicit dinic_network(std::uint32_t node_count);

    void add_arc(std::uint32_t u, std::uint32_t v, weight_t cap, weight_t rev_cap);
    std::size_t arc_count() const { return to_.size(); }

    /// Stops early once `limit` units are routed; the exact value otherwise.
    weight_t run(std::uint32_t s, std::uint32_t t,
                 weight_t limit = std::numeric_limits<weight_t>::max());

    /// Nodes reachable from s in the residual network; call after run().
    /// This is the inclusion-minimal source side over all s-t mincuts.
    std::vector<char> source_side_mask() const;

private:
    bool bfs_levels();
    weight_t dfs_push(std::uint32_t v, weight_t limit);

    std::uint32_t n_;
    std::uint32_t s_ = 0, t_ = 0;
    std::vector<std::uint32_t> to_;
    std::vector<weight_t> cap_;
    std::vector<std::uint32_t> tail_;
    std::vector<std::uint32_t> off_;   // CSR offsets, built in run()
    std::vector<std::uint32_t> arcs_;  // CSR arc ids
    std::vector<std::uint32_t> level_;
    std::vector<std::uint32_t> cur_;
    std::vector<std::uint32_t> queue_;
};

/// Shortest-augmenting-path maxflow (breadth-first residual search). Kept
/// structurally apart from dinic_network so the two solvers can cross-check
/// each other.
class ek_network {
public:
    explicit ek_network(std::uint32_t node_count);

    void add_arc(std::uint32_t u, std::uint32_t v, weight_t cap, weight_t rev_cap);

    weight_t run(std::uint32_t s, std::uint32_t t);
    std::vector<char> source_side_mask() const;

private:
    std::uint32_t n_;
    std::uint32_t s_ = 0;
    std::vector<std::uint32_t> to_;
    std::vector<weight_t> cap_;
    std::vector<std::vector<std::uint32_t>> out_;
};

}  // namespace ghtree::detail

#endif
