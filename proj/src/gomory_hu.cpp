#include "ghtree/gomory_hu.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace ghtree {

namespace {

struct tree_index {
    std::vector<vertex_id> terms;                      // sorted
    std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj;  // (terminal idx, edge idx)

    explicit tree_index(const gomory_hu_tree& t) : terms(t.terminals), adj(t.terminals.size()) {
        for (std::size_t i = 0; i < t.edges.size(); ++i) {
            adj[index_of(t.edges[i].u)].push_back({index_of(t.edges[i].v), i});
            adj[index_of(t.edges[i].v)].push_back({index_of(t.edges[i].u), i});
        }
    }

    std::uint32_t index_of(vertex_id term) const {
        const auto it = std::lower_bound(terms.begin(), terms.end(), term);
        if (it == terms.end() || *it != term) throw invalid_input_error("not a terminal of this tree");
        return static_cast<std::uint32_t>(it - terms.begin());
    }
};

}  // namespace

query_result tree_query(const gomory_hu_tree& t, vertex_id s, vertex_id u) {
    if (s == u) throw invalid_input_error("tree_query endpoints must differ");
    tree_index idx(t);
    const std::uint32_t si = idx.index_of(s), ti = idx.index_of(u);

    // BFS parents from s
    std::vector<std::uint32_t> parent(idx.terms.size(), invalid_vertex);
    std::vector<std::size_t> parent_edge(idx.terms.size(), 0);
    std::vector<std::uint32_t> queue{si};
    parent[si] = si;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        for (const auto& [next, eid] : idx.adj[v]) {
            if (parent[next] != invalid_vertex) continue;
            parent[next] = v;
            parent_edge[next] = eid;
            queue.push_back(next);
        }
    }
    if (parent[ti] == invalid_vertex) throw internal_error("tree_query: terminals not connected in tree");

    std::vector<std::size_t> path;  // edge ids from s toward t
    for (std::uint32_t v = ti; v != si; v = parent[v]) path.push_back(parent_edge[v]);
    std::reverse(path.begin(), path.end());
    weight_t best = t.edges[path.front()].w;
    for (std::size_t eid : path) best = std::min(best, t.edges[eid].w);
    std::size_t cut_edge = path.front();
    for (std::size_t eid : path) {
        if (t.edges[eid].w == best) {
            cut_edge = eid;
            break;
        }
    }

    // component of s after deleting cut_edge
    std::vector<char> in_side(idx.terms.size(), 0);
    queue.assign(1, si);
    in_side[si] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        for (const auto& [next, eid] : idx.adj[v]) {
            if (eid == cut_edge || in_side[next]) continue;
            in_side[next] = 1;
            queue.push_back(next);
        }
    }
    query_result res;
    res.value = best;
    std::vector<char> term_side(t.vertex_count, 0);
    for (std::size_t i = 0; i < idx.terms.size(); ++i)
        if (in_side[i]) term_side[idx.terms[i]] = 1;
    for (vertex_id v = 0; v < t.vertex_count; ++v)
        if (term_side[t.f[v]]) res.cut_side.push_back(v);
    return res;
}

std::vector<std::vector<vertex_id>> k_components(const gomory_hu_tree& t, weight_t k) {
    tree_index idx(t);
    std::vector<std::uint32_t> parent(idx.terms.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : t.edges) {
        if (e.w < k) continue;
        const std::uint32_t a = find(idx.index_of(e.u)), b = find(idx.index_of(e.v));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<vertex_id>> by_root(idx.terms.size());
    for (std::uint32_t i = 0; i < idx.terms.size(); ++i) by_root[find(i)].push_back(idx.terms[i]);
    std::vector<std::vector<vertex_id>> out;
    for (auto& comp : by_root)
        if (!comp.empty()) out.push_back(std::move(comp));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::vector<std::vector<weight_t>> tree_all_pairs_values(const gomory_hu_tree& t) {
    tree_index idx(t);
    const std::size_t k = idx.terms.size();
    std::vector<std::vector<weight_t>> out(k, std::vector<weight_t>(k, 0));
    std::vector<std::uint32_t> stack;
    std::vector<weight_t> best(k);
    std::vector<char> seen(k);
    for (std::uint32_t s = 0; s < k; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            for (const auto& [next, eid] : idx.adj[v]) {
                if (seen[next]) continue;
                seen[next] = 1;
                best[next] = v == s ? t.edges[eid].w : std::min(best[v], t.edges[eid].w);
                out[s][next] = best[next];
                stack.push_back(next);
            }
        }
    }
    return out;
}

void write_tree(std::ostream& out, const gomory_hu_tree& t) {
    auto edges = t.edges;
    for (auto& e : edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    for (const auto& e : edges) out << e.u << " " << e.v << " " << e.w << "\n";
    for (vertex_id v = 0; v < t.vertex_count; ++v) out << "f " << v << " " << t.f[v] << "\n";
}

void write_tree_file(const std::string& path, const gomory_hu_tree& t) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open file for writing: " + path);
    write_tree(out, t);
}

gomory_hu_tree read_tree(std::istream& in) {
    gomory_hu_tree t;
    std::map<vertex_id, vertex_id> fmap;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream row(line);
        if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] == 'f') {
            std::string tag;
            long long v = -1, term = -1;
            if (!(row >> tag >> v >> term) || tag != "f" || v < 0 || term < 0)
                throw io_error("malformed tree map line: " + line);
            if (!fmap.emplace(static_cast<vertex_id>(v), static_cast<vertex_id>(term)).second)
                throw io_error("duplicate map entry for vertex " + std::to_string(v));
        } else {
            long long u = -1, v = -1, w = -1;
            if (!(row >> u >> v >> w) || u < 0 || v < 0 || w < 0)
                throw io_error("malformed tree edge line: " + line);
            t.edges.push_back({static_cast<vertex_id>(u), static_cast<vertex_id>(v), w});
        }
    }
    if (fmap.empty()) throw io_error("tree input has no map lines");
    t.vertex_count = fmap.rbegin()->first + 1;
    if (fmap.size() != t.vertex_count) throw io_error("tree map must cover vertices 0..n-1");
    t.f.resize(t.vertex_count);
    std::vector<char> is_term(t.vertex_count, 0);
    for (const auto& [v, term] : fmap) {
        if (term >= t.vertex_count) throw io_error("tree map target out of range");
        t.f[v] = term;
        is_term[term] = 1;
    }
    for (vertex_id v = 0; v < t.vertex_count; ++v)
        if (is_term[v]) t.terminals.push_back(v);
    for (const auto& e : t.edges) {
        if (e.u >= t.vertex_count || e.v >= t.vertex_count || !is_term[e.u] || !is_term[e.v])
            throw io_error("tree edge endpoint is not a terminal");
    }
    for (vertex_id u : t.terminals)
        if (t.f[u] != u) throw io_error("terminal must map to itself");
    if (t.edges.size() + 1 != t.terminals.size())
        throw io_error("tree must have exactly |terminals|-1 edges");
    return t;
}

gomory_hu_tree read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open tree file: " + path);
    return read_tree(in);
}

}  // namespace ghtree
