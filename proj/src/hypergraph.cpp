#include "ghtree/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "ghtree/detail/flow_network.hpp"

namespace ghtree {

hypergraph::hypergraph(std::size_t vertex_count, std::vector<hyperedge> edges) : n_(vertex_count) {
    for (auto& e : edges) {
        if (e.w < 1) throw invalid_input_error("hyperedge weight must be a positive integer");
        std::sort(e.members.begin(), e.members.end());
        if (std::adjacent_find(e.members.begin(), e.members.end()) != e.members.end())
            throw invalid_input_error("duplicate vertex within a hyperedge");
        if (e.members.size() < 2) throw invalid_input_error("hyperedge needs at least two members");
        if (e.members.back() >= n_) throw invalid_input_error("hyperedge member out of range");
    }
    std::sort(edges.begin(), edges.end(),
              [](const hyperedge& a, const hyperedge& b) { return a.members < b.members; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (out > 0 && edges[out - 1].members == edges[i].members) {
            edges[out - 1].w += edges[i].w;
        } else {
            if (out != i) edges[out] = std::move(edges[i]);
            ++out;
        }
    }
    edges.resize(out);
    edges_ = std::move(edges);

    constexpr weight_t cap = std::numeric_limits<weight_t>::max() / 4;
    for (const hyperedge& e : edges_) {
        total_size_ += e.members.size();
        max_weight_ = std::max(max_weight_, e.w);
        if (total_weight_ > cap - e.w)
            throw invalid_input_error("total hyperedge weight exceeds supported range");
        total_weight_ += e.w;
    }
}

weight_t hypergraph::cut_value(std::span<const vertex_id> side) const {
    if (side.empty()) throw invalid_input_error("cut side must be nonempty");
    std::vector<char> in_side(n_, 0);
    std::size_t distinct = 0;
    for (vertex_id v : side) {
        if (v >= n_) throw invalid_input_error("cut side contains unknown vertex");
        if (!in_side[v]) {
            in_side[v] = 1;
            ++distinct;
        }
    }
    if (distinct == n_) throw invalid_input_error("cut side must be a proper subset");
    weight_t value = 0;
    for (const hyperedge& e : edges_) {
        bool has_in = false, has_out = false;
        for (vertex_id v : e.members) (in_side[v] ? has_in : has_out) = true;
        if (has_in && has_out) value += e.w;
    }
    return value;
}

std::pair<hypergraph, contraction_map> hypergraph::contract(
    std::span<const std::vector<vertex_id>> parts) const {
    std::vector<std::uint32_t> part_of(n_, invalid_vertex);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw invalid_input_error("contraction part must be nonempty");
        for (vertex_id v : parts[p]) {
            if (v >= n_) throw invalid_input_error("contraction part contains unknown vertex");
            if (part_of[v] != invalid_vertex) throw invalid_input_error("contraction parts overlap");
            part_of[v] = static_cast<std::uint32_t>(p);
        }
    }
    contraction_map map;
    map.forward.assign(n_, invalid_vertex);
    std::vector<vertex_id> part_ids(parts.size(), invalid_vertex);
    vertex_id next_id = 0;
    for (vertex_id v = 0; v < n_; ++v) {
        if (part_of[v] == invalid_vertex) {
            map.forward[v] = next_id++;
            map.blocks.push_back({v});
        } else if (part_ids[part_of[v]] == invalid_vertex) {
            part_ids[part_of[v]] = next_id;
            map.forward[v] = next_id++;
            auto block = parts[part_of[v]];
            std::sort(block.begin(), block.end());
            map.blocks.push_back(std::move(block));
        } else {
            map.forward[v] = part_ids[part_of[v]];
        }
    }
    std::vector<hyperedge> quotient;
    quotient.reserve(edges_.size());
    std::vector<vertex_id> members;
    for (const hyperedge& e : edges_) {
        members.clear();
        for (vertex_id v : e.members) members.push_back(map.forward[v]);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() >= 2) quotient.push_back({members, e.w});
    }
    return {hypergraph(next_id, std::move(quotient)), std::move(map)};
}

std::vector<std::vector<vertex_id>> hypergraph::connected_components() const {
    // union-find over hyperedge membership
    std::vector<vertex_id> parent(n_);
    for (vertex_id v = 0; v < n_; ++v) parent[v] = v;
    auto find = [&](vertex_id v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const hyperedge& e : edges_)
        for (std::size_t i = 1; i < e.members.size(); ++i) {
            const vertex_id a = find(e.members[0]), b = find(e.members[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<vertex_id>> by_root(n_);
    for (vertex_id v = 0; v < n_; ++v) by_root[find(v)].push_back(v);
    std::vector<std::vector<vertex_id>> out;
    for (auto& comp : by_root)
        if (!comp.empty()) out.push_back(std::move(comp));
    return out;
}

bool hypergraph::is_connected() const {
    return n_ <= 1 || connected_components().size() == 1;
}

weighted_graph hypergraph::as_graph() const {
    std::vector<edge> edges;
    edges.reserve(edges_.size());
    for (const hyperedge& e : edges_) {
        if (e.members.size() != 2)
            throw invalid_input_error("as_graph requires a 2-uniform hypergraph");
        edges.push_back({e.members[0], e.members[1], e.w});
    }
    return weighted_graph(n_, std::move(edges));
}

namespace {

// Directed expansion: node v < n is the original vertex; hyperedge i owns
// nodes n+2i (in) and n+2i+1 (out).
template <class Net>
Net build_expansion(const hypergraph& h, std::uint32_t extra_nodes, weight_t inf) {
    const std::uint32_t n = static_cast<std::uint32_t>(h.vertex_count());
    Net net(n + 2 * static_cast<std::uint32_t>(h.edge_count()) + extra_nodes);
    std::uint32_t idx = 0;
    for (const hyperedge& e : h.edges()) {
        const std::uint32_t e_in = n + 2 * idx;
        const std::uint32_t e_out = e_in + 1;
        net.add_arc(e_in, e_out, e.w, 0);
        for (vertex_id v : e.members) {
            net.add_arc(v, e_in, inf, 0);
            net.add_arc(e_out, v, inf, 0);
        }
        ++idx;
    }
    return net;
}

std::vector<vertex_id> original_side(const std::vector<char>& mask, std::size_t n) {
    std::vector<vertex_id> out;
    for (std::size_t v = 0; v < n; ++v)
        if (mask[v]) out.push_back(static_cast<vertex_id>(v));
    return out;
}

void validate_query(const hypergraph& h, vertex_id s, vertex_id t) {
    if (s >= h.vertex_count() || t >= h.vertex_count())
        throw invalid_input_error("maxflow endpoint out of range");
    if (s == t) throw invalid_input_error("maxflow endpoints must differ");
}

template <class Net>
flow_result solve_pair(const hypergraph& h, vertex_id s, vertex_id t, flow_counter* counter) {
    validate_query(h, s, t);
    const weight_t inf = h.total_weight() + 1;
    Net net = build_expansion<Net>(h, 0, inf);
    flow_result res;
    res.value = net.run(s, t);
    res.min_source_side = original_side(net.source_side_mask(), h.vertex_count());
    if (counter) counter->record(h.size_measure());
    return res;
}

}  // namespace

flow_result maxflow(const hypergraph& h, vertex_id s, vertex_id t, flow_counter* counter) {
    return solve_pair<detail::dinic_network>(h, s, t, counter);
}

bool maxflow_at_least(const hypergraph& h, vertex_id s, vertex_id t, weight_t threshold,
                      flow_counter* counter) {
    validate_query(h, s, t);
    if (threshold <= 0) return true;
    const weight_t inf = h.total_weight() + 1;
    detail::dinic_network net = build_expansion<detail::dinic_network>(h, 0, inf);
    const weight_t value = net.run(s, t, threshold);
    if (counter) counter->record(h.size_measure());
    return value >= threshold;
}

flow_result oracle_maxflow(const hypergraph& h, vertex_id s, vertex_id t, flow_counter* counter) {
    return solve_pair<detail::ek_network>(h, s, t, counter);
}

flow_result maxflow_between_sets(const hypergraph& h, std::span<const vertex_id> sources,
                                 std::span<const vertex_id> sinks, flow_counter* counter) {
    if (sources.empty() || sinks.empty())
        throw invalid_input_error("maxflow_between_sets: endpoint sets must be nonempty");
    const std::uint32_t n = static_cast<std::uint32_t>(h.vertex_count());
    const weight_t inf = h.total_weight() + 1;
    detail::dinic_network net = build_expansion<detail::dinic_network>(h, 2, inf);
    const std::uint32_t super_s = n + 2 * static_cast<std::uint32_t>(h.edge_count());
    const std::uint32_t super_t = super_s + 1;
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
    res.min_source_side = original_side(net.source_side_mask(), n);
    if (counter) counter->record(h.size_measure() + sources.size() + sinks.size());
    return res;
}

flow_result maxflow_isolated(const hypergraph& h, std::span<const vertex_id> group,
                             const std::vector<char>& region_mask, flow_counter* counter) {
    if (group.empty()) throw invalid_input_error("maxflow_isolated: group must be nonempty");
    const std::size_t n = h.vertex_count();
    std::vector<std::uint32_t> local(n, invalid_vertex);
    std::vector<vertex_id> region;
    for (std::size_t v = 0; v < n; ++v) {
        if (region_mask[v]) {
            local[v] = static_cast<std::uint32_t>(region.size());
            region.push_back(static_cast<vertex_id>(v));
        }
    }
    if (region.size() == n) throw invalid_input_error("maxflow_isolated: region must be proper");

    // trim hyperedges to the region, with one contracted sink vertex
    std::vector<hyperedge> trimmed;
    std::uint64_t instance_size = 0;
    const vertex_id sink_local = static_cast<vertex_id>(region.size());
    std::vector<vertex_id> members;
    for (const hyperedge& e : h.edges()) {
        members.clear();
        bool outside = false;
        for (vertex_id v : e.members) {
            if (region_mask[v])
                members.push_back(local[v]);
            else
                outside = true;
        }
        if (members.empty()) continue;
        if (outside) members.push_back(sink_local);
        if (members.size() < 2) continue;
        instance_size += members.size();
        trimmed.push_back({members, e.w});
    }
    hypergraph sub(region.size() + 1, std::move(trimmed));

    const weight_t inf = sub.total_weight() + 1;
    const std::uint32_t nodes = static_cast<std::uint32_t>(sub.vertex_count());
    detail::dinic_network net = build_expansion<detail::dinic_network>(sub, 1, inf);
    const std::uint32_t super_s = nodes + 2 * static_cast<std::uint32_t>(sub.edge_count());
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
    res.value = net.run(source, sink_local);
    const std::vector<char> mask = net.source_side_mask();
    for (std::size_t i = 0; i < region.size(); ++i)
        if (mask[i]) res.min_source_side.push_back(region[i]);
    if (counter) counter->record(instance_size);
    return res;
}

namespace {

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw io_error("empty hypergraph input");
    std::istringstream header(line);
    std::string tag;
    std::size_t n = 0, m = 0;
    if (!(header >> tag >> n >> m) || tag != "h")
        throw io_error("expected hypergraph header 'h <n> <m>'");
    std::vector<hyperedge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_data_line(in, line)) throw io_error("unexpected end of hypergraph input");
        std::istringstream row(line);
        long long w = 0, k = 0;
        if (!(row >> w >> k) || k < 0) throw io_error("malformed hyperedge line: " + line);
        hyperedge e;
        e.w = static_cast<weight_t>(w);
        for (long long j = 0; j < k; ++j) {
            long long v = -1;
            if (!(row >> v) || v < 0) throw io_error("malformed hyperedge line: " + line);
            e.members.push_back(static_cast<vertex_id>(v));
        }
        edges.push_back(std::move(e));
    }
    return hypergraph(n, std::move(edges));
}

hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open hypergraph file: " + path);
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const hypergraph& h) {
    out << "h " << h.vertex_count() << " " << h.edge_count() << "\n";
    for (const hyperedge& e : h.edges()) {
        out << e.w << " " << e.members.size();
        for (vertex_id v : e.members) out << " " << v;
        out << "\n";
    }
}

void write_hypergraph_file(const std::string& path, const hypergraph& h) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open file for writing: " + path);
    write_hypergraph(out, h);
}

}  // namespace ghtree
