#ifndef GHTREE_ENGINE_HPP
#define GHTREE_ENGINE_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "ghtree/decomposition.hpp"
#include "ghtree/gomory_hu.hpp"
#include "ghtree/partial_tree.hpp"
#include "ghtree/types.hpp"

namespace ghtree {

/// Terminal-count cutoff below which the recursion hands over to the classic
/// contraction scheme: ceil(4 * log_{3/2}(max(n,3))).
inline std::size_t classic_base_threshold(std::size_t n) {
    const double l = std::log(static_cast<double>(std::max<std::size_t>(n, 3))) / std::log(1.5);
    return static_cast<std::size_t>(std::ceil(4.0 * l));
}

inline std::size_t depth_bound(std::size_t terminal_count) {
    if (terminal_count <= 1) return 0;
    return static_cast<std::size_t>(std::floor(std::log(static_cast<double>(terminal_count)) / std::log(1.5)));
}

inline void record_instance(run_stats* stats, std::size_t depth, std::size_t vertices,
                            std::uint64_t size_measure) {
    if (!stats) return;
    stats->depth = std::max(stats->depth, depth);
    if (stats->level_vertices.size() <= depth) {
        stats->level_vertices.resize(depth + 1, 0);
        stats->level_edges.resize(depth + 1, 0);
    }
    stats->level_vertices[depth] += vertices;
    stats->level_edges[depth] += size_measure;
}

inline contraction_map identity_contraction(std::size_t n) {
    contraction_map m;
    m.forward.resize(n);
    m.blocks.resize(n);
    for (vertex_id v = 0; v < n; ++v) {
        m.forward[v] = v;
        m.blocks[v] = {v};
    }
    return m;
}

/// The 1961 contraction scheme, Steiner variant: maintains a tree of buckets
/// partitioning the vertex set, each bucket holding at least one terminal.
/// Repeatedly splits a bucket with two or more terminals along an (s,t)-
/// mincut computed with every neighboring subtree contracted. Uses exactly
/// |U|-1 maxflow calls.
template <class G>
gomory_hu_tree classic_ghtree(const G& g, std::span<const vertex_id> terminals,
                              flow_counter* counter = nullptr) {
    std::vector<vertex_id> terms = normalize_terminals({terminals.begin(), terminals.end()}, g.vertex_count());
    if (terms.empty()) throw invalid_input_error("classic_ghtree: empty terminal set");

    struct bucket {
        std::vector<vertex_id> vertices;
        std::vector<vertex_id> terminals;
    };
    std::vector<bucket> buckets;
    std::vector<std::vector<std::pair<std::uint32_t, weight_t>>> adj;

    bucket whole;
    whole.vertices.resize(g.vertex_count());
    std::iota(whole.vertices.begin(), whole.vertices.end(), 0);
    whole.terminals = terms;
    buckets.push_back(std::move(whole));
    adj.emplace_back();

    for (;;) {
        std::uint32_t pick = invalid_vertex;
        for (std::uint32_t i = 0; i < buckets.size(); ++i) {
            if (buckets[i].terminals.size() < 2) continue;
            if (pick == invalid_vertex || buckets[i].terminals[0] < buckets[pick].terminals[0]) pick = i;
        }
        if (pick == invalid_vertex) break;
        const vertex_id s = buckets[pick].terminals[0];
        const vertex_id t = buckets[pick].terminals[1];

        // one contraction part per neighboring subtree of the picked bucket
        std::vector<std::vector<vertex_id>> parts;
        std::vector<std::uint32_t> neighbor_bucket;
        std::vector<weight_t> neighbor_weight;
        {
            std::vector<char> visited(buckets.size(), 0);
            visited[pick] = 1;
            for (const auto& [nb, w] : adj[pick]) {
                if (visited[nb]) throw internal_error("classic: bucket tree has a cycle");
                std::vector<vertex_id> block;
                std::vector<std::uint32_t> stack{nb};
                visited[nb] = 1;
                while (!stack.empty()) {
                    const std::uint32_t b = stack.back();
                    stack.pop_back();
                    block.insert(block.end(), buckets[b].vertices.begin(), buckets[b].vertices.end());
                    for (const auto& [nn, ww] : adj[b]) {
                        if (!visited[nn]) {
                            visited[nn] = 1;
                            stack.push_back(nn);
                        }
                    }
                }
                parts.push_back(std::move(block));
                neighbor_bucket.push_back(nb);
                neighbor_weight.push_back(w);
            }
        }

        auto [sub, cmap] = g.contract(parts);
        const flow_result fr = maxflow(sub, cmap.forward[s], cmap.forward[t], counter);
        std::vector<char> side(sub.vertex_count(), 0);
        for (vertex_id v : fr.min_source_side) side[v] = 1;

        bucket bs, bt;
        for (vertex_id v : buckets[pick].vertices)
            (side[cmap.forward[v]] ? bs.vertices : bt.vertices).push_back(v);
        for (vertex_id v : buckets[pick].terminals)
            (side[cmap.forward[v]] ? bs.terminals : bt.terminals).push_back(v);
        if (bs.terminals.empty() || bt.terminals.empty())
            throw internal_error("classic: split failed to separate the chosen terminals");

        const std::uint32_t ns = pick;
        const std::uint32_t nt = static_cast<std::uint32_t>(buckets.size());
        buckets[ns] = std::move(bs);
        buckets.push_back(std::move(bt));
        adj.emplace_back();

        std::vector<std::pair<std::uint32_t, weight_t>> adj_s, adj_t;
        for (std::size_t i = 0; i < neighbor_bucket.size(); ++i) {
            const std::uint32_t nb = neighbor_bucket[i];
            const bool to_s = side[cmap.forward[parts[i].front()]] != 0;
            (to_s ? adj_s : adj_t).push_back({nb, neighbor_weight[i]});
            for (auto& [other, w] : adj[nb])
                if (other == pick) other = to_s ? ns : nt;
        }
        adj_s.push_back({nt, fr.value});
        adj_t.push_back({ns, fr.value});
        adj[ns] = std::move(adj_s);
        adj[nt] = std::move(adj_t);
    }

    gomory_hu_tree out;
    out.vertex_count = g.vertex_count();
    out.terminals = terms;
    out.f.assign(g.vertex_count(), invalid_vertex);
    for (std::uint32_t b = 0; b < buckets.size(); ++b) {
        if (buckets[b].terminals.size() != 1) throw internal_error("classic: non-singleton bucket remains");
        const vertex_id term = buckets[b].terminals[0];
        for (vertex_id v : buckets[b].vertices) out.f[v] = term;
        for (const auto& [nb, w] : adj[b])
            if (b < nb) out.edges.push_back({term, buckets[nb].terminals[0], w});
    }
    return out;
}

namespace detail {

template <class G>
class ghtree_engine {
public:
    ghtree_engine(const engine_config& cfg, run_stats* stats, flow_counter* counter)
        : cfg_(cfg), stats_(stats), counter_(counter) {}

    // terminals: sorted, nonempty, in g's id space; g connected
    gomory_hu_tree compute(const G& g, std::vector<vertex_id> terminals, rng_handle rng,
                           std::size_t depth) {
        record_instance(stats_, depth, g.vertex_count(), g.size_measure());
        if (terminals.size() <= classic_base_threshold(g.vertex_count()))
            return classic_ghtree(g, terminals, counter_);

        const threshold_result thr = find_threshold(g, terminals, rng, cfg_, counter_);
        const weight_t tau = thr.tau;
        const std::vector<vertex_id>& big = thr.component_terminals;
        if (2 * big.size() <= terminals.size())
            throw randomized_failure("threshold component lost its majority", rng.seed());

        std::vector<vertex_id> rest;
        std::set_difference(terminals.begin(), terminals.end(), big.begin(), big.end(),
                            std::back_inserter(rest));

        // ---- phase 1: recurse on the graph with the large component contracted
        gomory_hu_tree small_tree;
        contraction_map map_small;
        vertex_id super = invalid_vertex;
        struct limb {
            vertex_id child;  // neighbor terminal of the super vertex, in small ids
            weight_t w;
        };
        std::vector<limb> limbs;
        std::vector<std::uint32_t> limb_of_vertex(g.vertex_count(), invalid_vertex);

        std::optional<G> large_storage;
        const G* g_large = &g;
        contraction_map map_large = identity_contraction(g.vertex_count());

        if (!rest.empty()) {
            std::vector<std::vector<vertex_id>> big_part{big};
            auto [gs, ms] = g.contract(big_part);
            map_small = std::move(ms);
            super = map_small.forward[big.front()];
            std::vector<vertex_id> u_small;
            u_small.reserve(rest.size() + 1);
            for (vertex_id v : rest) u_small.push_back(map_small.forward[v]);
            u_small.push_back(super);
            std::sort(u_small.begin(), u_small.end());
            if (3 * u_small.size() > 2 * terminals.size())
                throw randomized_failure("phase-1 sub-instance did not shrink", rng.seed());
            small_tree = compute(gs, u_small, rng.split(), depth + 1);

            // decompose the small tree into the subtrees hanging off the super
            // vertex; each one becomes a contraction block of g
            std::vector<std::uint32_t> limb_of_term(gs.vertex_count(), invalid_vertex);
            {
                std::vector<std::vector<std::pair<vertex_id, weight_t>>> tadj(gs.vertex_count());
                for (const auto& e : small_tree.edges) {
                    tadj[e.u].push_back({e.v, e.w});
                    tadj[e.v].push_back({e.u, e.w});
                }
                for (const auto& [child, w] : tadj[super]) {
                    const std::uint32_t li = static_cast<std::uint32_t>(limbs.size());
                    limbs.push_back({child, w});
                    std::vector<vertex_id> stack{child};
                    limb_of_term[child] = li;
                    while (!stack.empty()) {
                        const vertex_id c = stack.back();
                        stack.pop_back();
                        for (const auto& [next, ww] : tadj[c]) {
                            if (next == super || limb_of_term[next] != invalid_vertex) continue;
                            limb_of_term[next] = li;
                            stack.push_back(next);
                        }
                    }
                }
            }
            std::vector<std::vector<vertex_id>> limb_parts(limbs.size());
            for (vertex_id v = 0; v < g.vertex_count(); ++v) {
                const vertex_id term = small_tree.f[map_small.forward[v]];
                const std::uint32_t li = limb_of_term[term];
                if (li != invalid_vertex) {
                    limb_parts[li].push_back(v);
                    limb_of_vertex[v] = li;
                }
            }
            auto [gl, ml] = g.contract(limb_parts);
            large_storage.emplace(std::move(gl));
            g_large = &*large_storage;
            map_large = std::move(ml);
        }

        // ---- phase 2: partial tree over the large component's terminals
        std::vector<vertex_id> u_large;
        u_large.reserve(big.size());
        for (vertex_id v : big) u_large.push_back(map_large.forward[v]);
        std::sort(u_large.begin(), u_large.end());
        const partial_tree part = partial_ghtree(*g_large, u_large, tau, rng.split(), cfg_, counter_);
        for (const auto& e : part.edges)
            if (e.w != tau)
                throw randomized_failure("partial tree produced an edge below the threshold", rng.seed());
        if (part.classes.size() < 2 && rest.empty())
            throw randomized_failure("threshold and partial tree disagree on the split", rng.seed());

        // ---- phase 3: recurse per class, neighbor subtrees contracted
        const std::size_t k = part.classes.size();
        std::vector<std::vector<std::size_t>> incident(k);
        for (std::size_t ei = 0; ei < part.edges.size(); ++ei) {
            incident[part.edges[ei].a].push_back(ei);
            incident[part.edges[ei].b].push_back(ei);
        }
        std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> cadj(k);
        for (std::size_t ei = 0; ei < part.edges.size(); ++ei) {
            cadj[part.edges[ei].a].push_back({part.edges[ei].b, ei});
            cadj[part.edges[ei].b].push_back({part.edges[ei].a, ei});
        }

        struct class_piece {
            bool recursed = false;
            gomory_hu_tree tree;     // in sub ids
            contraction_map map;     // g_large -> sub
            std::vector<vertex_id> avatars;  // sub id per incident edge slot
        };
        std::vector<class_piece> pieces(k);
        for (std::uint32_t ci = 0; ci < k; ++ci) {
            const auto& cls = part.classes[ci];
            if (cls.size() <= 1) continue;
            if (3 * cls.size() > 2 * terminals.size())
                throw randomized_failure("phase-3 sub-instance did not shrink", rng.seed());

            // slot per incident edge: classes beyond that edge
            std::vector<std::uint32_t> slot_of_class(k, invalid_vertex);
            for (std::size_t slot = 0; slot < incident[ci].size(); ++slot) {
                const auto& e = part.edges[incident[ci][slot]];
                const std::uint32_t entry = e.a == ci ? e.b : e.a;
                std::vector<std::uint32_t> stack{entry};
                slot_of_class[entry] = static_cast<std::uint32_t>(slot);
                while (!stack.empty()) {
                    const std::uint32_t c = stack.back();
                    stack.pop_back();
                    for (const auto& [next, eid] : cadj[c]) {
                        if (next == ci || slot_of_class[next] != invalid_vertex) continue;
                        slot_of_class[next] = static_cast<std::uint32_t>(slot);
                        stack.push_back(next);
                    }
                }
            }
            std::vector<std::vector<vertex_id>> parts(incident[ci].size());
            for (vertex_id w = 0; w < g_large->vertex_count(); ++w) {
                const std::uint32_t slot = slot_of_class[part.preimage[w]];
                if (slot != invalid_vertex) parts[slot].push_back(w);
            }
            auto [sub, msub] = g_large->contract(parts);
            std::vector<vertex_id> sub_terms;
            sub_terms.reserve(cls.size());
            for (vertex_id v : cls) sub_terms.push_back(msub.forward[v]);
            std::sort(sub_terms.begin(), sub_terms.end());
            class_piece piece;
            piece.tree = compute(sub, sub_terms, rng.split(), depth + 1);
            piece.avatars.reserve(parts.size());
            for (const auto& p : parts) piece.avatars.push_back(msub.forward[p.front()]);
            piece.map = std::move(msub);
            piece.recursed = true;
            pieces[ci] = std::move(piece);
        }

        // ---- phase 4: assemble the final tree in g's id space
        auto orig_of_large = [&](vertex_id large_term) {
            const auto& block = map_large.blocks[large_term];
            if (block.size() != 1) throw internal_error("assembly: terminal block is not a singleton");
            return block[0];
        };
        auto orig_of_small = [&](vertex_id small_term) {
            const auto& block = map_small.blocks[small_term];
            if (block.size() != 1) throw internal_error("assembly: small terminal was contracted");
            return block[0];
        };
        auto sub_term_to_orig = [&](const class_piece& piece, vertex_id sub_term) {
            const auto& block = piece.map.blocks[sub_term];
            if (block.size() != 1) throw internal_error("assembly: class terminal was contracted");
            return orig_of_large(block[0]);
        };
        // terminal assigned to a g_large vertex by the class-side pipeline
        auto class_f_orig = [&](vertex_id large_v) {
            const std::uint32_t ci = part.preimage[large_v];
            if (!pieces[ci].recursed) return orig_of_large(part.classes[ci][0]);
            const class_piece& piece = pieces[ci];
            return sub_term_to_orig(piece, piece.tree.f[piece.map.forward[large_v]]);
        };

        gomory_hu_tree out;
        out.vertex_count = g.vertex_count();
        out.terminals = terminals;
        out.f.assign(g.vertex_count(), invalid_vertex);
        for (vertex_id v = 0; v < g.vertex_count(); ++v) {
            if (limb_of_vertex[v] != invalid_vertex)
                out.f[v] = orig_of_small(small_tree.f[map_small.forward[v]]);
            else
                out.f[v] = class_f_orig(map_large.forward[v]);
        }

        // class-internal trees
        for (std::uint32_t ci = 0; ci < k; ++ci) {
            if (!pieces[ci].recursed) continue;
            for (const auto& e : pieces[ci].tree.edges)
                out.edges.push_back({sub_term_to_orig(pieces[ci], e.u), sub_term_to_orig(pieces[ci], e.v), e.w});
        }
        // partial-tree edges, endpoints at the terminals holding the
        // contracted far side of each cut
        auto port_of = [&](std::uint32_t ci, std::size_t edge_index) {
            if (!pieces[ci].recursed) return orig_of_large(part.classes[ci][0]);
            const auto& list = incident[ci];
            const auto it = std::find(list.begin(), list.end(), edge_index);
            if (it == list.end()) throw internal_error("assembly: edge not incident to class");
            const std::size_t slot = static_cast<std::size_t>(it - list.begin());
            const class_piece& piece = pieces[ci];
            return sub_term_to_orig(piece, piece.tree.f[piece.avatars[slot]]);
        };
        for (std::size_t ei = 0; ei < part.edges.size(); ++ei)
            out.edges.push_back({port_of(part.edges[ei].a, ei), port_of(part.edges[ei].b, ei),
                                 part.edges[ei].w});
        // small-tree edges; edges at the super vertex reattach to the terminal
        // assigned to the corresponding contracted block
        for (const auto& e : small_tree.edges) {
            if (e.u != super && e.v != super) {
                out.edges.push_back({orig_of_small(e.u), orig_of_small(e.v), e.w});
            } else {
                const vertex_id child = e.u == super ? e.v : e.u;
                const std::uint32_t li = [&] {
                    for (std::uint32_t i = 0; i < limbs.size(); ++i)
                        if (limbs[i].child == child) return i;
                    throw internal_error("assembly: super edge without a limb");
                }();
                // any vertex of the limb identifies the contracted avatar
                vertex_id block_rep = invalid_vertex;
                for (vertex_id v = 0; v < g.vertex_count() && block_rep == invalid_vertex; ++v)
                    if (limb_of_vertex[v] == li) block_rep = v;
                const vertex_id attach = class_f_orig(map_large.forward[block_rep]);
                out.edges.push_back({attach, orig_of_small(child), e.w});
            }
        }

        if (out.edges.size() + 1 != out.terminals.size())
            throw internal_error("assembly: edge count mismatch");
        for (vertex_id v = 0; v < g.vertex_count(); ++v)
            if (out.f[v] == invalid_vertex) throw internal_error("assembly: vertex left unassigned");
        return out;
    }

private:
    const engine_config& cfg_;
    run_stats* stats_;
    flow_counter* counter_;
};

template <class G>
std::pair<G, std::vector<vertex_id>> induced_subgraph(const G& g, const std::vector<vertex_id>& vertices);

template <>
inline std::pair<weighted_graph, std::vector<vertex_id>> induced_subgraph(
    const weighted_graph& g, const std::vector<vertex_id>& vertices) {
    std::vector<vertex_id> local(g.vertex_count(), invalid_vertex);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<vertex_id>(i);
    std::vector<edge> edges;
    for (const edge& e : g.edges())
        if (local[e.u] != invalid_vertex && local[e.v] != invalid_vertex)
            edges.push_back({local[e.u], local[e.v], e.w});
    return {weighted_graph(vertices.size(), std::move(edges)), vertices};
}

template <>
inline std::pair<hypergraph, std::vector<vertex_id>> induced_subgraph(
    const hypergraph& g, const std::vector<vertex_id>& vertices) {
    std::vector<vertex_id> local(g.vertex_count(), invalid_vertex);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<vertex_id>(i);
    std::vector<hyperedge> edges;
    for (const hyperedge& e : g.edges()) {
        std::vector<vertex_id> members;
        bool inside = true;
        for (vertex_id v : e.members) {
            if (local[v] == invalid_vertex) {
                inside = false;
                break;
            }
            members.push_back(local[v]);
        }
        if (inside) edges.push_back({std::move(members), e.w});
    }
    return {hypergraph(vertices.size(), std::move(edges)), vertices};
}

}  // namespace detail

}  // namespace ghtree

#endif
