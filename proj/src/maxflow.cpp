#include "ghtree/maxflow.hpp"

#include <algorithm>

#include "ghtree/detail/flow_network.hpp"

namespace ghtree {

namespace {

void validate_query(const weighted_graph& g, vertex_id s, vertex_id t) {
    if (s >= g.vertex_count() || t >= g.vertex_count())
        throw invalid_input_error("maxflow endpoint out of range");
    if (s == t) throw invalid_input_error("maxflow endpoints must differ");
}

std::vector<vertex_id> mask_to_ids(const std::vector<char>& mask, std::size_t limit) {
    std::vector<vertex_id> out;
    for (std::size_t v = 0; v < limit; ++v)
        if (mask[v]) out.push_back(static_cast<vertex_id>(v));
    return out;
}

template <class Net>
flow_result solve_pair(const weighted_graph& g, vertex_id s, vertex_id t, flow_counter* counter) {
    validate_query(g, s, t);
    Net net(static_cast<std::uint32_t>(g.vertex_count()));
    for (const edge& e : g.edges()) net.add_arc(e.u, e.v, e.w, e.w);
    flow_result res;
    res.value = net.run(s, t);
    res.min_source_side = mask_to_ids(net.source_side_mask(), g.vertex_count());
    if (counter) counter->record(g.edge_count());
    return res;
}

}  // namespace

flow_result maxflow(const weighted_graph& g, vertex_id s, vertex_id t, flow_counter* counter) {
    return solve_pair<detail::dinic_network>(g, s, t, counter);
}

bool maxflow_at_least(const weighted_graph& g, vertex_id s, vertex_id t, weight_t threshold,
                      flow_counter* counter) {
    validate_query(g, s, t);
    if (threshold <= 0) return true;
    detail::dinic_network net(static_cast<std::uint32_t>(g.vertex_count()));
    for (const edge& e : g.edges()) net.add_arc(e.u, e.v, e.w, e.w);
    const weight_t value = net.run(s, t, threshold);
    if (counter) counter->record(g.edge_count());
    return value >= threshold;
}

flow_result oracle_maxflow(const weighted_graph& g, vertex_id s, vertex_id t, flow_counter* counter) {
    return solve_pair<detail::ek_network>(g, s, t, counter);
}

flow_result maxflow_between_sets(const weighted_graph& g, std::span<const vertex_id> sources,
                                 std::span<const vertex_id> sinks, flow_counter* counter) {
    if (sources.empty() || sinks.empty())
        throw invalid_input_error("maxflow_between_sets: endpoint sets must be nonempty");
    const std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
    const std::uint32_t super_s = n;
    const std::uint32_t super_t = n + 1;
    const weight_t inf = g.total_weight() + 1;
    detail::dinic_network net(n + 2);
    for (const edge& e : g.edges()) net.add_arc(e.u, e.v, e.w, e.w);
    std::vector<char> is_source(n, 0);
    for (vertex_id v : sources) {
        if (v >= n) throw invalid_input_error("maxflow_between_sets: vertex out of range");
        is_source[v] = 1;
        net.add_arc(super_s, v, inf, 0);
    }
    for (vertex_id v : sinks) {
        if (v >= n || is_source[v])
            throw invalid_input_error("maxflow_between_sets: endpoint sets must be disjoint");
        net.add_arc(v, super_t, inf, 0);
    }
    flow_result res;
    res.value = net.run(super_s, super_t);
    res.min_source_side = mask_to_ids(net.source_side_mask(), n);
    if (counter) counter->record(g.edge_count() + sources.size() + sinks.size());
    return res;
}

flow_result maxflow_isolated(const weighted_graph& g, std::span<const vertex_id> group,
                             const std::vector<char>& region_mask, flow_counter* counter) {
    if (group.empty()) throw invalid_input_error("maxflow_isolated: group must be nonempty");
    const std::size_t n = g.vertex_count();
    // local ids for region vertices
    std::vector<std::uint32_t> local(n, invalid_vertex);
    std::vector<vertex_id> region;
    for (std::size_t v = 0; v < n; ++v) {
        if (region_mask[v]) {
            local[v] = static_cast<std::uint32_t>(region.size());
            region.push_back(static_cast<vertex_id>(v));
        }
    }
    if (region.size() == n) throw invalid_input_error("maxflow_isolated: region must be proper");
    const std::uint32_t sink = static_cast<std::uint32_t>(region.size());
    const std::uint32_t super_s = sink + 1;
    detail::dinic_network net(super_s + 1);
    std::uint64_t instance_edges = 0;
    weight_t inf = 0;
    for (const edge& e : g.edges()) {
        const bool iu = region_mask[e.u], iv = region_mask[e.v];
        if (!iu && !iv) continue;
        const std::uint32_t lu = iu ? local[e.u] : sink;
        const std::uint32_t lv = iv ? local[e.v] : sink;
        net.add_arc(lu, lv, e.w, e.w);
        ++instance_edges;
        inf += e.w;
    }
    ++inf;
    std::uint32_t source;
    if (group.size() == 1) {
        if (!region_mask[group[0]]) throw internal_error("maxflow_isolated: group outside region");
        source = local[group[0]];
    } else {
        source = super_s;
        for (vertex_id v : group) {
            if (!region_mask[v]) throw internal_error("maxflow_isolated: group outside region");
            net.add_arc(super_s, local[v], inf, 0);
        }
    }
    flow_result res;
    res.value = net.run(source, sink);
    const std::vector<char> mask = net.source_side_mask();
    for (std::size_t i = 0; i < region.size(); ++i)
        if (mask[i]) res.min_source_side.push_back(region[i]);
    if (counter) counter->record(instance_edges + (group.size() > 1 ? group.size() : 0));
    return res;
}

}  // namespace ghtree
