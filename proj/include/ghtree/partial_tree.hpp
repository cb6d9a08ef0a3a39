#ifndef GHTREE_PARTIAL_TREE_HPP
#define GHTREE_PARTIAL_TREE_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "ghtree/decomposition.hpp"
#include "ghtree/types.hpp"

namespace ghtree {

/// Tree over the (tau+1)-connected classes of a tau-connected terminal set,
/// capturing one mincut of value tau between every pair of classes. `preimage`
/// assigns every graph vertex to a class; the vertices mapped to one side of
/// any tree edge form a cut whose value equals the edge weight.
struct partial_tree {
    std::vector<std::vector<vertex_id>> classes;  // terminal classes, each sorted
    struct tree_edge {
        std::uint32_t a, b;  // class indices
        weight_t w;
    };
    std::vector<tree_edge> edges;
    std::vector<std::uint32_t> preimage;  // vertex -> class index

    std::size_t class_of_terminal(vertex_id t) const { return preimage.at(t); }
};

namespace detail {

template <class G>
partial_tree single_class_tree(const G& g, std::span<const vertex_id> terminals) {
    partial_tree t;
    t.classes.emplace_back(terminals.begin(), terminals.end());
    t.preimage.assign(g.vertex_count(), 0);
    return t;
}

template <class G>
partial_tree partial_ghtree_impl(const G& g, std::vector<vertex_id> terminals, weight_t tau,
                                 rng_handle rng, std::size_t depth, std::size_t depth_cap,
                                 flow_counter* counter) {
    if (terminals.size() <= 1) return single_class_tree(g, terminals);

    std::vector<cut_result> cuts;
    std::size_t consecutive_empty = 0;
    bool connectivity_checked = false;
    for (;;) {
        if (depth >= depth_cap) return single_class_tree(g, terminals);
        cuts = balanced_decomposition(g, terminals, tau + 1, rng, counter, true);
        if (!cuts.empty()) break;
        ++depth;
        ++consecutive_empty;
        // repeated empty rounds usually mean the terminals are already
        // (tau+1)-connected, in which case no future round can return a set
        // either; certify once and exit
        if (!connectivity_checked && consecutive_empty >= 2) {
            connectivity_checked = true;
            if (terminals_connected_at(g, terminals, tau + 1, counter))
                return single_class_tree(g, terminals);
        }
    }

    std::vector<char> covered(g.vertex_count(), 0);
    for (const cut_result& c : cuts)
        for (vertex_id v : c.side) covered[v] = 1;
    const bool all_covered =
        std::all_of(terminals.begin(), terminals.end(), [&](vertex_id v) { return covered[v] != 0; });
    if (all_covered) {
        // keep the rest side nonempty: drop the set whose smallest vertex id
        // is largest
        std::size_t drop = 0;
        for (std::size_t i = 1; i < cuts.size(); ++i)
            if (cuts[i].side.front() > cuts[drop].side.front()) drop = i;
        for (vertex_id v : cuts[drop].side) covered[v] = 0;
        cuts.erase(cuts.begin() + static_cast<std::ptrdiff_t>(drop));
    }

    struct piece {
        partial_tree tree;                 // over the piece instance's ids
        contraction_map map;               // g -> piece instance
        vertex_id outside_vertex;          // contracted complement in the instance
        weight_t boundary;                 // cut value of the side in g
        std::vector<vertex_id> side;       // the side in g's ids
    };
    std::vector<piece> pieces;
    pieces.reserve(cuts.size());
    std::vector<char> in_side(g.vertex_count(), 0);
    for (cut_result& c : cuts) {
        for (vertex_id v : c.side) in_side[v] = 1;
        std::vector<vertex_id> complement;
        complement.reserve(g.vertex_count() - c.side.size());
        for (vertex_id v = 0; v < g.vertex_count(); ++v)
            if (!in_side[v]) complement.push_back(v);
        for (vertex_id v : c.side) in_side[v] = 0;
        if (complement.empty()) throw internal_error("partial tree: cut side is not proper");
        const vertex_id complement_rep = complement.front();

        std::vector<std::vector<vertex_id>> parts{std::move(complement)};
        auto [sub, map] = g.contract(parts);
        std::vector<vertex_id> sub_terms;
        for (vertex_id v : terminals)
            if (std::binary_search(c.side.begin(), c.side.end(), v)) sub_terms.push_back(map.forward[v]);
        std::sort(sub_terms.begin(), sub_terms.end());
        const vertex_id x = map.forward[complement_rep];
        partial_tree sub_tree =
            sub_terms.size() > 1
                ? partial_ghtree_impl(sub, sub_terms, tau, rng.split(), depth + 1, depth_cap, counter)
                : single_class_tree(sub, sub_terms);
        pieces.push_back({std::move(sub_tree), std::move(map), x, c.value, std::move(c.side)});
    }

    std::vector<std::vector<vertex_id>> rest_parts;
    rest_parts.reserve(pieces.size());
    for (const piece& p : pieces) rest_parts.push_back(p.side);
    auto [rest_graph, rest_map] = g.contract(rest_parts);
    std::vector<vertex_id> rest_terms;
    for (vertex_id v : terminals)
        if (!covered[v]) rest_terms.push_back(rest_map.forward[v]);
    std::sort(rest_terms.begin(), rest_terms.end());
    if (rest_terms.empty()) throw internal_error("partial tree: rest side lost all terminals");
    partial_tree rest_tree =
        rest_terms.size() > 1
            ? partial_ghtree_impl(rest_graph, rest_terms, tau, rng.split(), depth + 1, depth_cap, counter)
            : single_class_tree(rest_graph, rest_terms);

    // combine: pieces hang off the rest tree, one edge per piece, weighted by
    // the piece's boundary cut in g
    partial_tree out;
    std::vector<std::uint32_t> piece_offset(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        piece_offset[i] = static_cast<std::uint32_t>(out.classes.size());
        for (const auto& cls : pieces[i].tree.classes) {
            std::vector<vertex_id> orig;
            orig.reserve(cls.size());
            for (vertex_id local : cls) {
                const auto& block = pieces[i].map.blocks[local];
                if (block.size() != 1) throw internal_error("partial tree: terminal was contracted");
                orig.push_back(block[0]);
            }
            std::sort(orig.begin(), orig.end());
            out.classes.push_back(std::move(orig));
        }
        for (const auto& e : pieces[i].tree.edges)
            out.edges.push_back({piece_offset[i] + e.a, piece_offset[i] + e.b, e.w});
    }
    const std::uint32_t rest_offset = static_cast<std::uint32_t>(out.classes.size());
    for (const auto& cls : rest_tree.classes) {
        std::vector<vertex_id> orig;
        orig.reserve(cls.size());
        for (vertex_id local : cls) {
            const auto& block = rest_map.blocks[local];
            if (block.size() != 1) throw internal_error("partial tree: terminal was contracted");
            orig.push_back(block[0]);
        }
        std::sort(orig.begin(), orig.end());
        out.classes.push_back(std::move(orig));
    }
    for (const auto& e : rest_tree.edges)
        out.edges.push_back({rest_offset + e.a, rest_offset + e.b, e.w});

    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const std::uint32_t piece_class = piece_offset[i] + pieces[i].tree.preimage[pieces[i].outside_vertex];
        const vertex_id y = rest_map.forward[pieces[i].side.front()];
        const std::uint32_t rest_class = rest_offset + rest_tree.preimage[y];
        out.edges.push_back({piece_class, rest_class, pieces[i].boundary});
    }

    out.preimage.assign(g.vertex_count(), 0);
    std::vector<std::uint32_t> owner(g.vertex_count(), invalid_vertex);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (vertex_id v : pieces[i].side) owner[v] = static_cast<std::uint32_t>(i);
    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
        if (owner[v] != invalid_vertex) {
            const piece& p = pieces[owner[v]];
            out.preimage[v] = piece_offset[owner[v]] + p.tree.preimage[p.map.forward[v]];
        } else {
            out.preimage[v] = rest_offset + rest_tree.preimage[rest_map.forward[v]];
        }
    }
    return out;
}

}  // namespace detail

/// Structural validation of a partial tree against its graph: classes
/// partition the terminals, the edges form a spanning tree over the classes
/// with weights at most tau, and every edge's preimage side is a cut of
/// exactly the edge's value.
template <class G>
void validate_partial_tree(const G& g, std::span<const vertex_id> terminals, weight_t tau,
                           const partial_tree& t) {
    std::vector<char> seen_terminal(g.vertex_count(), 0);
    std::size_t covered = 0;
    for (const auto& cls : t.classes) {
        if (cls.empty()) throw internal_error("partial tree: empty class");
        for (vertex_id v : cls) {
            if (!std::binary_search(terminals.begin(), terminals.end(), v))
                throw internal_error("partial tree: class holds a non-terminal");
            if (seen_terminal[v]) throw internal_error("partial tree: classes overlap");
            seen_terminal[v] = 1;
            ++covered;
        }
    }
    if (covered != terminals.size()) throw internal_error("partial tree: classes miss a terminal");
    if (t.preimage.size() != g.vertex_count()) throw internal_error("partial tree: preimage not total");
    for (const auto& cls : t.classes)
        for (vertex_id v : cls)
            if (t.classes[t.preimage[v]] != cls) throw internal_error("partial tree: terminal preimage mismatch");
    if (t.edges.size() + 1 != t.classes.size()) throw internal_error("partial tree: edge count");

    // spanning + acyclic via union-find
    std::vector<std::uint32_t> parent(t.classes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : t.edges) {
        if (e.w >= tau + 1) throw internal_error("partial tree: edge weight above tau");
        const std::uint32_t a = find(e.a), b = find(e.b);
        if (a == b) throw internal_error("partial tree: cycle");
        parent[a] = b;
    }

    // adjacency over classes for edge-side extraction
    std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(t.classes.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        adj[t.edges[i].a].push_back({t.edges[i].b, i});
        adj[t.edges[i].b].push_back({t.edges[i].a, i});
    }
    std::vector<char> in_component(t.classes.size());
    std::vector<std::uint32_t> stack;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        std::fill(in_component.begin(), in_component.end(), 0);
        stack.assign(1, t.edges[i].a);
        in_component[t.edges[i].a] = 1;
        while (!stack.empty()) {
            const std::uint32_t c = stack.back();
            stack.pop_back();
            for (const auto& [next, eid] : adj[c]) {
                if (eid == i || in_component[next]) continue;
                in_component[next] = 1;
                stack.push_back(next);
            }
        }
        std::vector<vertex_id> side;
        for (vertex_id v = 0; v < g.vertex_count(); ++v)
            if (in_component[t.preimage[v]]) side.push_back(v);
        if (g.cut_value(side) != t.edges[i].w)
            throw internal_error("partial tree: edge preimage is not a cut of the edge's value");
    }
}

/// Computes the (tau+1)-partial Gomory-Hu tree of a tau-connected terminal
/// set by recursive balanced decomposition. Classes are ordered by smallest
/// terminal id. Randomized; validated structurally before returning.
template <class G>
partial_tree partial_ghtree(const G& g, std::span<const vertex_id> terminals, weight_t tau,
                            rng_handle rng, const engine_config& cfg = {},
                            flow_counter* counter = nullptr) {
    if (tau < 1) throw invalid_input_error("partial_ghtree needs tau >= 1");
    std::vector<vertex_id> terms =
        normalize_terminals({terminals.begin(), terminals.end()}, g.vertex_count());
    if (terms.empty()) throw invalid_input_error("partial_ghtree: empty terminal set");

    const std::size_t cap = log2_squared_rounds(cfg.c_partial, g.vertex_count());
    partial_tree t = detail::partial_ghtree_impl(g, std::move(terms), tau, rng, 0, cap, counter);

    // canonical class order: by smallest terminal id
    std::vector<std::uint32_t> order(t.classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return t.classes[a].front() < t.classes[b].front(); });
    std::vector<std::uint32_t> rank(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    partial_tree canon;
    canon.classes.resize(t.classes.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) canon.classes[i] = std::move(t.classes[order[i]]);
    for (auto e : t.edges) {
        e.a = rank[e.a];
        e.b = rank[e.b];
        if (e.a > e.b) std::swap(e.a, e.b);
        canon.edges.push_back(e);
    }
    std::sort(canon.edges.begin(), canon.edges.end(), [](const auto& x, const auto& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    canon.preimage.resize(t.preimage.size());
    for (std::size_t v = 0; v < t.preimage.size(); ++v) canon.preimage[v] = rank[t.preimage[v]];

    std::vector<vertex_id> sorted_terms =
        normalize_terminals({terminals.begin(), terminals.end()}, g.vertex_count());
    validate_partial_tree(g, sorted_terms, tau, canon);
    return canon;
}

}  // namespace ghtree

#endif
