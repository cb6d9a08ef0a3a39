#ifndef GHTREE_ISOLATING_CUTS_HPP
#define GHTREE_ISOLATING_CUTS_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "ghtree/graph.hpp"
#include "ghtree/hypergraph.hpp"
#include "ghtree/maxflow.hpp"
#include "ghtree/types.hpp"

namespace ghtree {

struct isolating_cut {
    std::size_t group;             // index into the input group list
    std::vector<vertex_id> side;   // sorted; contains exactly this group's terminals
    weight_t value;                // cut value of side
};

/// For >= 2 pairwise disjoint terminal groups, computes pairwise disjoint
/// minimal isolating mincuts: side_i contains group i, excludes every other
/// group, and has minimum cut value among all such separators. Uses
/// ceil(log2 h) maxflows across bit-index bipartitions of the group labels,
/// then one maxflow per group inside the region carved out by intersecting
/// the minimal source sides of those rounds.
template <class G>
std::vector<isolating_cut> compute_isolating_cuts(const G& g,
                                                  std::span<const std::vector<vertex_id>> groups,
                                                  flow_counter* counter = nullptr) {
    const std::size_t n = g.vertex_count();
    const std::size_t h = groups.size();
    if (h < 2) throw invalid_input_error("isolating cuts need at least two groups");

    std::vector<std::uint32_t> group_of(n, invalid_vertex);
    for (std::size_t i = 0; i < h; ++i) {
        if (groups[i].empty()) throw invalid_input_error("isolating cuts: empty group");
        for (vertex_id v : groups[i]) {
            if (v >= n) throw invalid_input_error("isolating cuts: vertex out of range");
            if (group_of[v] != invalid_vertex) throw invalid_input_error("isolating cuts: groups overlap");
            group_of[v] = static_cast<std::uint32_t>(i);
        }
    }

    unsigned bits = 0;
    while ((std::size_t{1} << bits) < h) ++bits;

    // signature[v]: bit b set iff v landed on the minimal source side (label
    // bit clear side) of round b. Skipped rounds keep the bit clear everywhere.
    std::vector<std::uint64_t> signature(n, 0);
    std::uint64_t used_rounds = 0;
    std::vector<vertex_id> zeros, ones;
    for (unsigned b = 0; b < bits; ++b) {
        zeros.clear();
        ones.clear();
        for (std::size_t i = 0; i < h; ++i) {
            auto& dst = ((i >> b) & 1u) ? ones : zeros;
            dst.insert(dst.end(), groups[i].begin(), groups[i].end());
        }
        if (zeros.empty() || ones.empty()) continue;  // labels all agree on this bit
        used_rounds |= std::uint64_t{1} << b;
        const flow_result round = maxflow_between_sets(g, zeros, ones, counter);
        for (vertex_id v : round.min_source_side) signature[v] |= std::uint64_t{1} << b;
    }

    std::vector<isolating_cut> out;
    out.reserve(h);
    std::vector<char> region(n, 0);
    for (std::size_t i = 0; i < h; ++i) {
        std::uint64_t expect = 0;
        for (unsigned b = 0; b < bits; ++b)
            if ((used_rounds >> b & 1u) && !((i >> b) & 1u)) expect |= std::uint64_t{1} << b;
        std::uint64_t round_mask = used_rounds;
        for (std::size_t v = 0; v < n; ++v) region[v] = (signature[v] & round_mask) == expect;
        for (vertex_id v : groups[i]) {
            if (!region[v]) throw internal_error("isolating cuts: group escaped its region");
        }
        flow_result fr = maxflow_isolated(g, groups[i], region, counter);
        out.push_back({i, std::move(fr.min_source_side), fr.value});
    }

    // contract checks: disjoint sides, exact terminal content, stated values
    std::vector<char> seen(n, 0);
    for (const isolating_cut& cut : out) {
        std::size_t own_terminals = 0;
        for (vertex_id v : cut.side) {
            if (seen[v]) throw internal_error("isolating cuts: sides overlap");
            seen[v] = 1;
            if (group_of[v] != invalid_vertex) {
                if (group_of[v] != cut.group) throw internal_error("isolating cuts: foreign terminal in side");
                ++own_terminals;
            }
        }
        if (own_terminals != groups[cut.group].size())
            throw internal_error("isolating cuts: side lost a terminal");
        if (g.cut_value(cut.side) != cut.value)
            throw internal_error("isolating cuts: value mismatch");
    }
    return out;
}

}  // namespace ghtree

#endif
