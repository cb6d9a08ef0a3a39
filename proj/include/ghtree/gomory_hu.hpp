#ifndef GHTREE_GOMORY_HU_HPP
#define GHTREE_GOMORY_HU_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ghtree/types.hpp"

namespace ghtree {

/// Gomory-Hu tree over a terminal set U: a spanning tree on U whose
/// path-minimum edge weight between two terminals equals their mincut value
/// in the source graph, plus a total map f from every graph vertex to a
/// terminal such that the f-preimage of either side of any tree edge is a cut
/// of exactly the edge's weight.
struct gomory_hu_tree {
    std::size_t vertex_count = 0;  // of the source graph (domain of f)
    std::vector<vertex_id> terminals;  // sorted
    struct tree_edge {
        vertex_id u, v;
        weight_t w;
    };
    std::vector<tree_edge> edges;  // |terminals| - 1 of them
    std::vector<vertex_id> f;      // vertex -> terminal
};

/// Maxflow-call and instance-size accounting of one tree construction.
struct run_stats {
    std::uint64_t seed = 0;
    std::size_t depth = 0;                      // deepest recursion level reached
    std::vector<std::uint64_t> level_vertices;  // per level: summed instance vertex counts
    std::vector<std::uint64_t> level_edges;     // per level: summed instance sizes (m or p)
    std::uint64_t maxflow_calls = 0;
    std::uint64_t maxflow_instance_sum = 0;
    std::uint64_t wall_ms = 0;
    int retries = 0;

    std::uint64_t total_instance_edges() const {
        std::uint64_t s = 0;
        for (auto e : level_edges) s += e;
        return s;
    }
};

struct query_result {
    weight_t value;
    std::vector<vertex_id> cut_side;  // sorted f-preimage of the s-side
};

/// Path-minimum query: value is the smallest edge weight on the s-t tree
/// path; cut_side is the f-preimage of the s-side component after removing
/// the first minimum edge encountered from s.
query_result tree_query(const gomory_hu_tree& t, vertex_id s, vertex_id u);

/// Terminal sets of the components of the tree after deleting all edges of
/// weight < k, ordered by smallest member.
std::vector<std::vector<vertex_id>> k_components(const gomory_hu_tree& t, weight_t k);

/// All-pairs path-minimum values over the tree, indexed by terminal position.
std::vector<std::vector<weight_t>> tree_all_pairs_values(const gomory_hu_tree& t);

// Tree text format: edge lines `<u> <v> <w>`, then one `f <v> <terminal>`
// line per vertex; `#` starts a comment. Deterministic serialization.
void write_tree(std::ostream& out, const gomory_hu_tree& t);
void write_tree_file(const std::string& path, const gomory_hu_tree& t);
gomory_hu_tree read_tree(std::istream& in);
gomory_hu_tree read_tree_file(const std::string& path);

}  // namespace ghtree

#endif
