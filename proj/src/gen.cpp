#include "ghtree/gen.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ghtree/types.hpp"

namespace ghtree {

namespace {

weight_t random_weight(rng_handle& rng, const gen_params& p) {
    if (p.weight_min < 1 || p.weight_max < p.weight_min)
        throw invalid_input_error("generator needs 1 <= weight_min <= weight_max");
    return static_cast<weight_t>(
        rng.uniform(static_cast<std::uint64_t>(p.weight_min), static_cast<std::uint64_t>(p.weight_max)));
}

weighted_graph gen_gnp(const gen_params& p, rng_handle rng) {
    if (p.n < 2) throw invalid_input_error("gnp needs n >= 2");
    if (p.density < 0.0 || p.density > 1.0) throw invalid_input_error("gnp density must be in [0,1]");
    std::set<std::pair<vertex_id, vertex_id>> taken;
    std::vector<edge> edges;
    if (p.ensure_connected) {
        for (vertex_id v = 1; v < p.n; ++v) {
            const vertex_id parent = static_cast<vertex_id>(rng.below(v));
            taken.insert({parent, v});
            edges.push_back({parent, v, random_weight(rng, p)});
        }
    }
    for (vertex_id u = 0; u + 1 < p.n; ++u)
        for (vertex_id v = u + 1; v < p.n; ++v) {
            if (rng.uniform01() >= p.density) continue;
            if (taken.contains({u, v})) continue;
            edges.push_back({u, v, random_weight(rng, p)});
        }
    return weighted_graph(p.n, std::move(edges));
}

weighted_graph gen_two_cliques_bridge(const gen_params& p) {
    if (p.n < 2) throw invalid_input_error("two-cliques-bridge needs n >= 2");
    const vertex_id h = static_cast<vertex_id>(p.n / 2);
    std::vector<edge> edges;
    for (vertex_id u = 0; u < h; ++u)
        for (vertex_id v = u + 1; v < h; ++v) edges.push_back({u, v, 1});
    for (vertex_id u = h; u < p.n; ++u)
        for (vertex_id v = u + 1; v < p.n; ++v) edges.push_back({u, v, 1});
    edges.push_back({h - 1, h, 1});
    return weighted_graph(p.n, std::move(edges));
}

weighted_graph gen_grid(const gen_params& p) {
    std::size_t rows = p.rows, cols = p.cols;
    if (rows == 0 && cols == 0 && p.n > 0) {
        rows = cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(p.n))));
    }
    if (rows == 0 || cols == 0) throw invalid_input_error("grid needs rows and cols (or n)");
    auto at = [cols](std::size_t r, std::size_t c) { return static_cast<vertex_id>(r * cols + c); };
    std::vector<edge> edges;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({at(r, c), at(r, c + 1), 1});
            if (r + 1 < rows) edges.push_back({at(r, c), at(r + 1, c), 1});
        }
    return weighted_graph(rows * cols, std::move(edges));
}

weighted_graph gen_tree_plus_edges(const gen_params& p, rng_handle rng) {
    if (p.n < 2) throw invalid_input_error("tree-plus-edges needs n >= 2");
    std::set<std::pair<vertex_id, vertex_id>> taken;
    std::vector<edge> edges;
    for (vertex_id v = 1; v < p.n; ++v) {
        const vertex_id parent = static_cast<vertex_id>(rng.below(v));
        taken.insert({parent, v});
        edges.push_back({parent, v, random_weight(rng, p)});
    }
    std::size_t added = 0;
    for (std::size_t attempts = 0; added < p.extra_edges && attempts < 20 * p.extra_edges + 100; ++attempts) {
        vertex_id u = static_cast<vertex_id>(rng.below(p.n));
        vertex_id v = static_cast<vertex_id>(rng.below(p.n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!taken.insert({u, v}).second) continue;
        edges.push_back({u, v, random_weight(rng, p)});
        ++added;
    }
    return weighted_graph(p.n, std::move(edges));
}

hypergraph gen_hyper_random(const gen_params& p, rng_handle rng) {
    if (p.n < 2) throw invalid_input_error("hyper-random needs n >= 2");
    if (p.arity_min < 2 || p.arity_max < p.arity_min)
        throw invalid_input_error("hyper-random needs 2 <= arity_min <= arity_max");
    std::vector<hyperedge> edges;
    for (std::size_t i = 0; i < p.edges; ++i) {
        const std::size_t k =
            std::min<std::size_t>(p.n, rng.uniform(p.arity_min, p.arity_max));
        std::vector<vertex_id> members;
        while (members.size() < k) {
            const vertex_id v = static_cast<vertex_id>(rng.below(p.n));
            if (std::find(members.begin(), members.end(), v) == members.end()) members.push_back(v);
        }
        edges.push_back({std::move(members), 1});
    }
    if (p.ensure_connected) {
        hypergraph probe(p.n, edges);
        const auto comps = probe.connected_components();
        for (std::size_t i = 1; i < comps.size(); ++i)
            edges.push_back({{comps[i - 1].front(), comps[i].front()}, 1});
    }
    return hypergraph(p.n, std::move(edges));
}

}  // namespace

generated_instance generate_instance(const std::string& kind, const gen_params& params,
                                     std::uint64_t seed) {
    rng_handle rng(seed);
    if (kind == "gnp") return gen_gnp(params, rng);
    if (kind == "two-cliques-bridge") return gen_two_cliques_bridge(params);
    if (kind == "grid") return gen_grid(params);
    if (kind == "tree-plus-edges") return gen_tree_plus_edges(params, rng);
    if (kind == "hyper-random") return gen_hyper_random(params, rng);
    throw invalid_input_error("unknown instance kind: " + kind);
}

}  // namespace ghtree
