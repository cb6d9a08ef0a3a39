#include "ghtree/build.hpp"

#include <algorithm>
#include <chrono>

#include "ghtree/engine.hpp"

namespace ghtree {

namespace {

// terminal side of each tree edge: component membership after deleting it
std::vector<char> edge_side_terminals(const gomory_hu_tree& t, std::size_t edge_index,
                                      const std::vector<std::vector<std::pair<vertex_id, std::size_t>>>& tadj) {
    std::vector<char> in_side(t.vertex_count, 0);
    std::vector<vertex_id> stack{t.edges[edge_index].u};
    in_side[t.edges[edge_index].u] = 1;
    while (!stack.empty()) {
        const vertex_id v = stack.back();
        stack.pop_back();
        for (const auto& [next, eid] : tadj[v]) {
            if (eid == edge_index || in_side[next]) continue;
            in_side[next] = 1;
            stack.push_back(next);
        }
    }
    return in_side;
}

template <class G>
std::vector<weight_t> edge_cut_values_impl(const G& g, const gomory_hu_tree& t) {
    std::vector<std::vector<std::pair<vertex_id, std::size_t>>> tadj(t.vertex_count);
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        tadj[t.edges[i].u].push_back({t.edges[i].v, i});
        tadj[t.edges[i].v].push_back({t.edges[i].u, i});
    }
    std::vector<weight_t> out;
    out.reserve(t.edges.size());
    std::vector<vertex_id> side;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const std::vector<char> term_side = edge_side_terminals(t, i, tadj);
        side.clear();
        for (vertex_id v = 0; v < t.vertex_count; ++v)
            if (term_side[t.f[v]]) side.push_back(v);
        out.push_back(g.cut_value(side));
    }
    return out;
}

template <class G>
void validate_tree(const G& g, const std::vector<vertex_id>& terms, const gomory_hu_tree& t,
                   std::uint64_t seed) {
    if (t.vertex_count != g.vertex_count() || t.f.size() != g.vertex_count())
        throw internal_error("tree map must cover every vertex");
    if (t.terminals != terms) throw internal_error("tree terminal set mismatch");
    if (t.edges.size() + 1 != terms.size()) throw internal_error("tree edge count mismatch");
    std::vector<char> is_term(g.vertex_count(), 0);
    for (vertex_id u : terms) is_term[u] = 1;
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (t.f[v] == invalid_vertex || !is_term[t.f[v]])
            throw internal_error("tree map target is not a terminal");
    for (vertex_id u : terms)
        if (t.f[u] != u) throw internal_error("terminal mapped away from itself");

    // spanning over terminals
    std::vector<vertex_id> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](vertex_id v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::size_t joins = 0;
    for (const auto& e : t.edges) {
        if (!is_term[e.u] || !is_term[e.v]) throw internal_error("tree edge endpoint is not a terminal");
        const vertex_id a = find(e.u), b = find(e.v);
        if (a == b) throw internal_error("tree has a cycle");
        parent[a] = b;
        ++joins;
    }
    if (joins + 1 != terms.size()) throw internal_error("tree is not connected");

    // cut certificate per edge; a mismatch means the randomized construction
    // went wrong, which is retryable
    const std::vector<weight_t> cuts = edge_cut_values_impl(g, t);
    for (std::size_t i = 0; i < cuts.size(); ++i)
        if (cuts[i] != t.edges[i].w)
            throw randomized_failure("tree edge failed its cut certificate", seed);
}

template <class G>
gomory_hu_tree build_over_components(const G& g, const std::vector<vertex_id>& terms,
                                     const build_options& opt, rng_handle& rng, run_stats* stats,
                                     flow_counter* counter) {
    gomory_hu_tree out;
    out.vertex_count = g.vertex_count();
    out.terminals = terms;
    out.f.assign(g.vertex_count(), invalid_vertex);

    const auto comps = g.connected_components();
    std::vector<vertex_id> chain;  // first terminal per terminal-bearing component
    detail::ghtree_engine<G> engine(opt.config, stats, counter);
    for (const auto& comp : comps) {
        std::vector<vertex_id> comp_terms;
        std::set_intersection(terms.begin(), terms.end(), comp.begin(), comp.end(),
                              std::back_inserter(comp_terms));
        if (comp_terms.empty()) {
            for (vertex_id v : comp) out.f[v] = terms.front();
            continue;
        }
        auto [sub, to_orig] = detail::induced_subgraph(g, comp);
        std::vector<vertex_id> local_terms;
        local_terms.reserve(comp_terms.size());
        std::vector<vertex_id> local(g.vertex_count(), invalid_vertex);
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<vertex_id>(i);
        for (vertex_id v : comp_terms) local_terms.push_back(local[v]);

        gomory_hu_tree sub_tree;
        if (opt.use_classic) {
            record_instance(stats, 0, sub.vertex_count(), sub.size_measure());
            sub_tree = classic_ghtree(sub, local_terms, counter);
        } else {
            sub_tree = engine.compute(sub, local_terms, rng.split(), 0);
        }
        for (const auto& e : sub_tree.edges)
            out.edges.push_back({to_orig[e.u], to_orig[e.v], e.w});
        for (std::size_t i = 0; i < comp.size(); ++i) out.f[comp[i]] = to_orig[sub_tree.f[i]];
        chain.push_back(comp_terms.front());
    }
    for (std::size_t i = 1; i < chain.size(); ++i) out.edges.push_back({chain[i - 1], chain[i], 0});
    return out;
}

template <class G>
build_result build_impl(const G& g, std::vector<vertex_id> terminals, const build_options& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    if (g.vertex_count() == 0) throw invalid_input_error("cannot build a tree of the empty graph");
    std::vector<vertex_id> terms;
    if (terminals.empty()) {
        terms.resize(g.vertex_count());
        std::iota(terms.begin(), terms.end(), 0);
    } else {
        terms = normalize_terminals(std::move(terminals), g.vertex_count());
    }

    rng_handle master(opt.seed);
    const int attempts = std::max(1, opt.config.build_retries);
    for (int attempt = 0;; ++attempt) {
        rng_handle run_rng = master.split();
        run_stats stats;
        stats.seed = opt.seed;
        stats.retries = attempt;
        flow_counter counter;
        try {
            gomory_hu_tree tree = build_over_components(g, terms, opt, run_rng, &stats, &counter);
            validate_tree(g, terms, tree, opt.seed);
            if (stats.depth > depth_bound(terms.size()))
                throw internal_error("recursion exceeded its depth bound");
            stats.maxflow_calls = counter.calls.load();
            stats.maxflow_instance_sum = counter.instance_size_sum.load();
            stats.wall_ms = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                    .count());
            return {std::move(tree), std::move(stats)};
        } catch (const randomized_failure&) {
            if (attempt + 1 >= attempts) throw;
        }
    }
}

}  // namespace

build_result build_gomory_hu_tree(const weighted_graph& g, std::vector<vertex_id> terminals,
                                  const build_options& opt) {
    return build_impl(g, std::move(terminals), opt);
}

build_result build_gomory_hu_tree(const hypergraph& h, std::vector<vertex_id> terminals,
                                  const build_options& opt) {
    return build_impl(h, std::move(terminals), opt);
}

std::vector<weight_t> tree_edge_cut_values(const weighted_graph& g, const gomory_hu_tree& t) {
    return edge_cut_values_impl(g, t);
}

std::vector<weight_t> tree_edge_cut_values(const hypergraph& h, const gomory_hu_tree& t) {
    return edge_cut_values_impl(h, t);
}

}  // namespace ghtree
