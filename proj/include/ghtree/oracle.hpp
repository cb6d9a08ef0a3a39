#ifndef GHTREE_ORACLE_HPP
#define GHTREE_ORACLE_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "ghtree/build.hpp"
#include "ghtree/decomposition.hpp"
#include "ghtree/gomory_hu.hpp"
#include "ghtree/types.hpp"

namespace ghtree {

/// All-pairs mincut values via the oracle maxflow solver. Refuses instances
/// above the configured cap.
template <class G>
std::vector<std::vector<weight_t>> all_pairs_mincut(const G& g, const engine_config& cfg = {},
                                                    flow_counter* counter = nullptr) {
    const std::size_t n = g.vertex_count();
    if (n > cfg.oracle_maxflow_cap)
        throw oracle_refused_error("instance exceeds the maxflow oracle cap of " +
                                   std::to_string(cfg.oracle_maxflow_cap) + " vertices");
    std::vector<std::vector<weight_t>> table(n, std::vector<weight_t>(n, 0));
    for (vertex_id s = 0; s < n; ++s)
        for (vertex_id t = s + 1; t < n; ++t) {
            const weight_t v = oracle_maxflow(g, s, t, counter).value;
            table[s][t] = table[t][s] = v;
        }
    return table;
}

/// Exhaustive (s,t)-mincut over all 2^(n-2) separating subsets. Ties broken
/// by smaller side, then lexicographically smaller sorted id list.
template <class G>
std::pair<weight_t, std::vector<vertex_id>> enumerate_mincut(const G& g, vertex_id s, vertex_id t,
                                                             const engine_config& cfg = {}) {
    const std::size_t n = g.vertex_count();
    if (n > cfg.oracle_enumeration_cap)
        throw oracle_refused_error("instance exceeds the enumeration oracle cap of " +
                                   std::to_string(cfg.oracle_enumeration_cap) + " vertices");
    if (s >= n || t >= n || s == t) throw invalid_input_error("enumerate_mincut: bad endpoints");
    std::vector<vertex_id> others;
    for (vertex_id v = 0; v < n; ++v)
        if (v != s && v != t) others.push_back(v);
    weight_t best = -1;
    std::vector<vertex_id> best_side;
    std::vector<vertex_id> side;
    for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
        side.assign(1, s);
        for (std::size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1u) side.push_back(others[i]);
        std::sort(side.begin(), side.end());
        const weight_t value = g.cut_value(side);
        if (best < 0 || value < best ||
            (value == best && (side.size() < best_side.size() ||
                               (side.size() == best_side.size() && side < best_side)))) {
            best = value;
            best_side = side;
        }
    }
    return {best, std::move(best_side)};
}

/// All-pairs mincut table from one sweep over every cut containing vertex 0.
template <class G>
std::vector<std::vector<weight_t>> enumerate_lambda_table(const G& g, const engine_config& cfg = {}) {
    const std::size_t n = g.vertex_count();
    if (n > cfg.oracle_enumeration_cap)
        throw oracle_refused_error("instance exceeds the enumeration oracle cap of " +
                                   std::to_string(cfg.oracle_enumeration_cap) + " vertices");
    if (n < 2) return {n, std::vector<weight_t>(n, 0)};
    const weight_t unset = -1;
    std::vector<std::vector<weight_t>> table(n, std::vector<weight_t>(n, unset));
    std::vector<vertex_id> side;
    const std::uint32_t full = (1u << (n - 1)) - 1;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        side.assign(1, 0);
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (mask >> i & 1u) side.push_back(static_cast<vertex_id>(i + 1));
        const weight_t value = g.cut_value(side);
        std::vector<char> in_side(n, 0);
        for (vertex_id v : side) in_side[v] = 1;
        for (vertex_id u = 0; u < n; ++u) {
            if (!in_side[u]) continue;
            for (vertex_id v = 0; v < n; ++v) {
                if (in_side[v]) continue;
                if (table[u][v] == unset || value < table[u][v]) table[u][v] = table[v][u] = value;
            }
        }
    }
    for (vertex_id v = 0; v < n; ++v) table[v][v] = 0;
    return table;
}

/// tau-connected classes of a terminal set, read off a lambda table.
inline std::vector<std::vector<vertex_id>> connectivity_classes(
    const std::vector<std::vector<weight_t>>& lambda, std::span<const vertex_id> terminals, weight_t tau) {
    std::vector<std::vector<vertex_id>> classes;
    std::vector<char> used(terminals.size(), 0);
    for (std::size_t i = 0; i < terminals.size(); ++i) {
        if (used[i]) continue;
        std::vector<vertex_id> cls{terminals[i]};
        used[i] = 1;
        for (std::size_t j = i + 1; j < terminals.size(); ++j)
            if (!used[j] && lambda[terminals[i]][terminals[j]] >= tau) {
                used[j] = 1;
                cls.push_back(terminals[j]);
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

struct verification_report {
    struct value_mismatch {
        vertex_id s, t;
        weight_t tree_value, oracle_value;
    };
    struct edge_mismatch {
        std::size_t edge_index;
        vertex_id u, v;
        weight_t weight, cut;
    };
    std::vector<value_mismatch> value_mismatches;
    std::vector<edge_mismatch> edge_mismatches;
    std::vector<std::string> map_violations;
    bool oracle_refused = false;
    std::size_t pairs_checked = 0;

    bool clean() const {
        return value_mismatches.empty() && edge_mismatches.empty() && map_violations.empty();
    }
    bool certified() const { return clean() && !oracle_refused; }
};

/// End-to-end certification: (1) every terminal pair's path minimum matches
/// the oracle mincut value (skipped with `oracle_refused` set when the
/// instance exceeds the cap); (2) every tree edge's preimage side is a cut of
/// exactly its weight; (3) the vertex map is total, terminal-fixing and lands
/// in the terminal set.
template <class G>
verification_report verify_ghtree(const G& g, std::span<const vertex_id> terminals,
                                  const gomory_hu_tree& t, const engine_config& cfg = {}) {
    verification_report report;
    std::vector<vertex_id> terms =
        normalize_terminals({terminals.begin(), terminals.end()}, g.vertex_count());
    if (terms.empty()) terms = t.terminals;

    // (3) map checks
    if (t.vertex_count != g.vertex_count() || t.f.size() != g.vertex_count())
        report.map_violations.push_back("map does not cover the vertex set");
    if (t.terminals != terms) report.map_violations.push_back("terminal set mismatch");
    std::vector<char> is_term(g.vertex_count(), 0);
    for (vertex_id u : t.terminals)
        if (u < g.vertex_count()) is_term[u] = 1;
    for (vertex_id v = 0; v < t.f.size() && v < g.vertex_count(); ++v)
        if (t.f[v] == invalid_vertex || t.f[v] >= g.vertex_count() || !is_term[t.f[v]])
            report.map_violations.push_back("vertex " + std::to_string(v) + " has no terminal assignment");
    for (vertex_id u : t.terminals)
        if (u < t.f.size() && t.f[u] != u)
            report.map_violations.push_back("terminal " + std::to_string(u) + " mapped away from itself");
    if (!report.map_violations.empty()) return report;

    // (2) edge cut certificates, all scales
    const std::vector<weight_t> cuts = tree_edge_cut_values(g, t);
    for (std::size_t i = 0; i < cuts.size(); ++i)
        if (cuts[i] != t.edges[i].w)
            report.edge_mismatches.push_back({i, t.edges[i].u, t.edges[i].v, t.edges[i].w, cuts[i]});

    // (1) value oracle
    if (g.vertex_count() > cfg.oracle_maxflow_cap) {
        report.oracle_refused = true;
        return report;
    }
    const auto lambda = all_pairs_mincut(g, cfg);
    const auto path_min = tree_all_pairs_values(t);
    for (std::size_t i = 0; i < t.terminals.size(); ++i)
        for (std::size_t j = i + 1; j < t.terminals.size(); ++j) {
            ++report.pairs_checked;
            const weight_t tv = path_min[i][j];
            const weight_t ov = lambda[t.terminals[i]][t.terminals[j]];
            if (tv != ov) report.value_mismatches.push_back({t.terminals[i], t.terminals[j], tv, ov});
        }
    return report;
}

}  // namespace ghtree

#endif
