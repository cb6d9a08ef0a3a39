#include "ghtree/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace ghtree {

std::vector<vertex_id> normalize_terminals(std::vector<vertex_id> ids, std::size_t vertex_count) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (!ids.empty() && ids.back() >= vertex_count)
        throw invalid_input_error("terminal id " + std::to_string(ids.back()) + " out of range");
    return ids;
}

bool valid_terminal_set(const std::vector<vertex_id>& ids, std::size_t vertex_count) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] >= vertex_count) return false;
        if (i > 0 && ids[i - 1] >= ids[i]) return false;
    }
    return true;
}

contraction_map contraction_map::compose(const contraction_map& first, const contraction_map& second) {
    if (first.quotient_count() != second.original_count())
        throw internal_error("contraction_map::compose: shape mismatch");
    contraction_map out;
    out.forward.resize(first.original_count());
    for (std::size_t v = 0; v < first.original_count(); ++v)
        out.forward[v] = second.forward[first.forward[v]];
    out.blocks.resize(second.quotient_count());
    for (std::size_t q = 0; q < second.quotient_count(); ++q) {
        auto& block = out.blocks[q];
        for (vertex_id mid : second.blocks[q])
            block.insert(block.end(), first.blocks[mid].begin(), first.blocks[mid].end());
        std::sort(block.begin(), block.end());
    }
    return out;
}

std::vector<vertex_id> contraction_map::pull_back(std::span<const vertex_id> quotient_side) const {
    std::vector<vertex_id> out;
    for (vertex_id q : quotient_side) {
        if (q >= blocks.size()) throw internal_error("pull_back: quotient id out of range");
        out.insert(out.end(), blocks[q].begin(), blocks[q].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

weighted_graph::weighted_graph(std::size_t vertex_count, std::vector<edge> edges) : n_(vertex_count) {
    for (auto& e : edges) {
        if (e.u >= n_ || e.v >= n_)
            throw invalid_input_error("edge endpoint out of range");
        if (e.u == e.v)
            throw invalid_input_error("self-loop on vertex " + std::to_string(e.u));
        if (e.w < 1)
            throw invalid_input_error("edge weight must be a positive integer");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const edge& a, const edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    // merge parallel edges, summing weights
    std::size_t out = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (out > 0 && edges[out - 1].u == edges[i].u && edges[out - 1].v == edges[i].v) {
            edges[out - 1].w += edges[i].w;
        } else {
            edges[out++] = edges[i];
        }
    }
    edges.resize(out);
    edges_ = std::move(edges);

    constexpr weight_t cap = std::numeric_limits<weight_t>::max() / 4;
    for (const edge& e : edges_) {
        max_weight_ = std::max(max_weight_, e.w);
        if (total_weight_ > cap - e.w)
            throw invalid_input_error("total edge weight exceeds supported range");
        total_weight_ += e.w;
    }

    adj_offsets_.assign(n_ + 1, 0);
    for (const edge& e : edges_) {
        ++adj_offsets_[e.u + 1];
        ++adj_offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) adj_offsets_[v + 1] += adj_offsets_[v];
    adj_.resize(2 * edges_.size());
    std::vector<std::uint32_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const edge& e : edges_) {
        adj_[cursor[e.u]++] = {e.v, e.w};
        adj_[cursor[e.v]++] = {e.u, e.w};
    }
}

std::span<const weighted_graph::adj_entry> weighted_graph::neighbors(vertex_id v) const {
    if (v >= n_) throw invalid_input_error("vertex id out of range");
    return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
}

weight_t weighted_graph::weighted_degree(vertex_id v) const {
    weight_t d = 0;
    for (const adj_entry& a : neighbors(v)) d += a.w;
    return d;
}

weight_t weighted_graph::cut_value(std::span<const vertex_id> side) const {
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
    for (const edge& e : edges_)
        if (in_side[e.u] != in_side[e.v]) value += e.w;
    return value;
}

std::pair<weighted_graph, contraction_map> weighted_graph::contract(
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
    // quotient ids in order of smallest original id
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

    std::vector<edge> quotient_edges;
    quotient_edges.reserve(edges_.size());
    for (const edge& e : edges_) {
        const vertex_id qu = map.forward[e.u];
        const vertex_id qv = map.forward[e.v];
        if (qu != qv) quotient_edges.push_back({qu, qv, e.w});
    }
    return {weighted_graph(next_id, std::move(quotient_edges)), std::move(map)};
}

std::vector<std::vector<vertex_id>> weighted_graph::connected_components() const {
    std::vector<char> seen(n_, 0);
    std::vector<std::vector<vertex_id>> out;
    std::vector<vertex_id> stack;
    for (vertex_id start = 0; start < n_; ++start) {
        if (seen[start]) continue;
        std::vector<vertex_id> comp;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const vertex_id v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const adj_entry& a : neighbors(v)) {
                if (!seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool weighted_graph::is_connected() const {
    return n_ <= 1 || connected_components().size() == 1;
}

namespace {

// Strips comments and returns the next non-blank line.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

weighted_graph read_graph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw io_error("empty graph input");
    std::istringstream header(line);
    std::string tag;
    std::size_t n = 0, m = 0;
    if (!(header >> tag >> n >> m) || tag != "g")
        throw io_error("expected graph header 'g <n> <m>'");
    std::vector<edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_data_line(in, line)) throw io_error("unexpected end of graph input");
        std::istringstream row(line);
        long long u = -1, v = -1, w = 0;
        if (!(row >> u >> v >> w)) throw io_error("malformed edge line: " + line);
        if (u < 0 || v < 0) throw io_error("negative vertex id in edge line: " + line);
        edges.push_back({static_cast<vertex_id>(u), static_cast<vertex_id>(v), static_cast<weight_t>(w)});
    }
    return weighted_graph(n, std::move(edges));
}

weighted_graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const weighted_graph& g) {
    out << "g " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const edge& e : g.edges()) out << e.u << " " << e.v << " " << e.w << "\n";
}

void write_graph_file(const std::string& path, const weighted_graph& g) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open file for writing: " + path);
    write_graph(out, g);
}

}  // namespace ghtree
