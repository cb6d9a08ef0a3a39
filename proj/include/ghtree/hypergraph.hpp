#ifndef GHTREE_HYPERGRAPH_HPP
#define GHTREE_HYPERGRAPH_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ghtree/graph.hpp"
#include "ghtree/maxflow.hpp"
#include "ghtree/types.hpp"

namespace ghtree {

struct hyperedge {
    std::vector<vertex_id> members;  // sorted, distinct, size >= 2
    weight_t w;
};

/// Vertex set plus weighted hyperedges. A cut counts the weight of hyperedges
/// with members on both sides. Contraction merges members inside hyperedges,
/// drops hyperedges that collapse to a single vertex and merges hyperedges
/// that become identical (weights add up). Immutable after construction.
class hypergraph {
public:
    hypergraph() = default;
    hypergraph(std::size_t vertex_count, std::vector<hyperedge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Total size p = sum of hyperedge cardinalities.
    std::uint64_t size_measure() const { return total_size_; }
    std::span<const hyperedge> edges() const { return edges_; }
    weight_t total_weight() const { return total_weight_; }
    weight_t max_weight() const { return max_weight_; }
    bool unweighted() const { return max_weight_ <= 1; }

    weight_t cut_value(std::span<const vertex_id> side) const;
    std::pair<hypergraph, contraction_map> contract(std::span<const std::vector<vertex_id>> parts) const;
    std::vector<std::vector<vertex_id>> connected_components() const;
    bool is_connected() const;

    /// The incidence-preserving graph with one vertex per hyperedge endpoint
    /// merged; defined only when every hyperedge has exactly two members.
    weighted_graph as_graph() const;

private:
    std::size_t n_ = 0;
    std::vector<hyperedge> edges_;  // canonical: members sorted, edges sorted, duplicates merged
    std::uint64_t total_size_ = 0;
    weight_t total_weight_ = 0;
    weight_t max_weight_ = 0;
};

inline weight_t cut_value(const hypergraph& h, std::span<const vertex_id> side) {
    return h.cut_value(side);
}
inline std::pair<hypergraph, contraction_map> contract(const hypergraph& h,
                                                       std::span<const std::vector<vertex_id>> parts) {
    return h.contract(parts);
}
inline std::vector<std::vector<vertex_id>> connected_components(const hypergraph& h) {
    return h.connected_components();
}

// Hypergraph (s,t)-maxflow via the directed vertex expansion: per hyperedge an
// in/out node pair joined by an arc of the hyperedge weight, member arcs of
// effectively-infinite capacity. min_source_side holds original vertices only.
flow_result maxflow(const hypergraph& h, vertex_id s, vertex_id t, flow_counter* counter = nullptr);
bool maxflow_at_least(const hypergraph& h, vertex_id s, vertex_id t, weight_t threshold,
                      flow_counter* counter = nullptr);
flow_result oracle_maxflow(const hypergraph& h, vertex_id s, vertex_id t, flow_counter* counter = nullptr);
flow_result maxflow_between_sets(const hypergraph& h, std::span<const vertex_id> sources,
                                 std::span<const vertex_id> sinks, flow_counter* counter = nullptr);
flow_result maxflow_isolated(const hypergraph& h, std::span<const vertex_id> group,
                             const std::vector<char>& region_mask, flow_counter* counter = nullptr);

// Text format: `h <n> <m>` then per hyperedge `<w> <k> <v1> ... <vk>`;
// `#` starts a comment. Deterministic serialization.
hypergraph read_hypergraph(std::istream& in);
hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const hypergraph& h);
void write_hypergraph_file(const std::string& path, const hypergraph& h);

}  // namespace ghtree

#endif
