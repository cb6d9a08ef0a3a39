#ifndef GHTREE_GRAPH_HPP
#define GHTREE_GRAPH_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ghtree/types.hpp"

namespace ghtree {

struct edge {
    vertex_id u;
    vertex_id v;
    weight_t w;
};

/// Total map from the vertices of a graph onto the vertices of its quotient
/// under a contraction. `forward` is defined for every original vertex;
/// `blocks` partitions the original vertex set.
struct contraction_map {
    std::vector<vertex_id> forward;             // original id -> quotient id
    std::vector<std::vector<vertex_id>> blocks; // quotient id -> original ids, sorted

    std::size_t original_count() const { return forward.size(); }
    std::size_t quotient_count() const { return blocks.size(); }

    /// Map applying `first` then `second`.
    static contraction_map compose(const contraction_map& first, const contraction_map& second);

    /// Original vertices whose quotient image lies in `quotient_side`.
    std::vector<vertex_id> pull_back(std::span<const vertex_id> quotient_side) const;
};

/// Undirected weighted graph over dense vertex ids 0..n-1. Parallel edges are
/// merged on construction (weights add up), self-loops are rejected, weights
/// are positive integers. Immutable after construction.
class weighted_graph {
public:
    struct adj_entry {
        vertex_id to;
        weight_t w;
    };

    weighted_graph() = default;
    weighted_graph(std::size_t vertex_count, std::vector<edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    /// Instance size used by the recursion-size accounting (= edge count).
    std::uint64_t size_measure() const { return edges_.size(); }
    std::span<const edge> edges() const { return edges_; }
    std::span<const adj_entry> neighbors(vertex_id v) const;
    weight_t total_weight() const { return total_weight_; }
    weight_t max_weight() const { return max_weight_; }
    weight_t weighted_degree(vertex_id v) const;

    /// Sum of weights of edges with exactly one endpoint in `side`.
    weight_t cut_value(std::span<const vertex_id> side) const;

    /// Contract each set in `parts` (pairwise disjoint, nonempty) into one
    /// vertex; remaining vertices map to themselves. Quotient ids are dense,
    /// ordered by smallest contained original id. Self-loops are dropped and
    /// parallel edges merged.
    std::pair<weighted_graph, contraction_map> contract(std::span<const std::vector<vertex_id>> parts) const;

    /// Maximal connected vertex sets, ordered by smallest contained id.
    std::vector<std::vector<vertex_id>> connected_components() const;

    bool is_connected() const;

private:
    std::size_t n_ = 0;
    std::vector<edge> edges_;  // canonical: u < v, sorted by (u, v), merged
    weight_t total_weight_ = 0;
    weight_t max_weight_ = 0;
    std::vector<std::uint32_t> adj_offsets_;
    std::vector<adj_entry> adj_;
};

inline weight_t cut_value(const weighted_graph& g, std::span<const vertex_id> side) {
    return g.cut_value(side);
}
inline std::pair<weighted_graph, contraction_map> contract(const weighted_graph& g,
                                                           std::span<const std::vector<vertex_id>> parts) {
    return g.contract(parts);
}
inline std::vector<std::vector<vertex_id>> connected_components(const weighted_graph& g) {
    return g.connected_components();
}

// Text format: `g <n> <m>` then m lines `<u> <v> <w>`; `#` starts a comment.
// Writing is deterministic: edges sorted by (min id, max id).
weighted_graph read_graph(std::istream& in);
weighted_graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const weighted_graph& g);
void write_graph_file(const std::string& path, const weighted_graph& g);

}  // namespace ghtree

#endif
