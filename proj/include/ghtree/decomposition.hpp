#ifndef GHTREE_DECOMPOSITION_HPP
#define GHTREE_DECOMPOSITION_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "ghtree/isolating_cuts.hpp"
#include "ghtree/types.hpp"

namespace ghtree {

struct engine_config {
    // Round counts of the peeling loop and the partial-tree recursion cap are
    // c * ceil(log2^2(max(n,4))).
    double c_detect = 4.0;
    double c_partial = 4.0;
    int threshold_retries = 16;
    int build_retries = 5;
    std::size_t oracle_maxflow_cap = 60;
    std::size_t oracle_enumeration_cap = 14;
};

inline std::size_t log2_squared_rounds(double c, std::size_t n) {
    const double l = std::log2(static_cast<double>(std::max<std::size_t>(n, 4)));
    return static_cast<std::size_t>(std::ceil(c * l * l));
}

struct cut_result {
    std::vector<vertex_id> side;  // sorted
    weight_t value;
};

namespace detail {

/// Pairwise connectivity certificate: lambda obeys the max-min triangle
/// inequality, so a star of flow-limited checks from one terminal covers all
/// pairs.
template <class G>
bool terminals_connected_at(const G& g, std::span<const vertex_id> terminals, weight_t threshold,
                            flow_counter* counter, bool assume_connected = false) {
    if (assume_connected && threshold <= 1) return true;
    for (std::size_t i = 1; i < terminals.size(); ++i)
        if (!maxflow_at_least(g, terminals[0], terminals[i], threshold, counter)) return false;
    return true;
}

}  // namespace detail

struct threshold_result {
    weight_t tau;
    std::vector<vertex_id> component_terminals;  // sorted, > |U|/2 of them
};

/// One randomized decomposition round: draws a sampling level j uniformly
/// from {1..floor(log2 |A|)}, samples R from the active terminals A with
/// per-vertex probability 2^-j, computes isolating cuts for the singletons of
/// R and keeps the sides with cut value below tau holding at most half of A.
/// Returns pairwise disjoint sides (possibly none).
///
/// `assume_connected` lets callers that know the instance is connected skip
/// the isolating-cut work when tau <= 1 (no cut of value < 1 exists then);
/// the returned list is empty either way.
template <class G>
std::vector<cut_result> balanced_decomposition(const G& g, std::span<const vertex_id> active,
                                               weight_t tau, rng_handle& rng,
                                               flow_counter* counter = nullptr,
                                               bool assume_connected = false) {
    if (active.size() < 2) throw invalid_input_error("balanced_decomposition needs >= 2 active terminals");
    for (vertex_id v : active)
        if (v >= g.vertex_count()) throw invalid_input_error("active terminal out of range");

    unsigned max_level = 0;
    while ((std::size_t{1} << (max_level + 1)) <= active.size()) ++max_level;
    const unsigned j = static_cast<unsigned>(rng.uniform(1, max_level));

    std::vector<std::vector<vertex_id>> sampled;
    for (vertex_id v : active)
        if (rng.coin_pow2(j)) sampled.push_back({v});
    if (sampled.size() < 2) return {};
    if (assume_connected && tau <= 1) return {};

    const auto cuts = compute_isolating_cuts(g, sampled, counter);

    std::vector<char> is_active(g.vertex_count(), 0);
    for (vertex_id v : active) is_active[v] = 1;

    std::vector<cut_result> out;
    for (const isolating_cut& cut : cuts) {
        if (cut.value >= tau) continue;
        std::size_t active_inside = 0;
        for (vertex_id v : cut.side) active_inside += is_active[v];
        if (2 * active_inside > active.size()) continue;
        out.push_back({cut.side, cut.value});
    }
    // sides inherit disjointness from the isolating cuts; re-check the filters
    std::vector<char> seen(g.vertex_count(), 0);
    for (const cut_result& c : out) {
        if (c.value >= tau) throw internal_error("balanced_decomposition: value filter violated");
        for (vertex_id v : c.side) {
            if (seen[v]) throw internal_error("balanced_decomposition: sides overlap");
            seen[v] = 1;
        }
    }
    return out;
}

/// Iteratively peels balanced small cuts off the active set. Returns the
/// surviving set when it still holds more than half of U (the terminal part
/// of the largest tau-connected component), otherwise the empty set.
///
/// A majority component's terminals can never be peeled (any cut below tau
/// either misses them or fails the balance filter), so empty answers are
/// always sound. Nonempty answers exit through a connectivity certificate,
/// which makes them exact: a tau-connected majority IS the component's
/// terminal part. The certificate is tried after a short dry streak and
/// backed off exponentially when it fails, up to the usual log^2 stability
/// window; running out of the round budget with an uncertified majority is a
/// detectable randomized failure.
template <class G>
std::vector<vertex_id> detect_large_cc(const G& g, std::span<const vertex_id> terminals, weight_t tau,
                                       rng_handle& rng, const engine_config& cfg = {},
                                       flow_counter* counter = nullptr, bool assume_connected = false) {
    if (terminals.empty()) throw invalid_input_error("detect_large_cc needs a nonempty terminal set");
    std::vector<vertex_id> active(terminals.begin(), terminals.end());
    if (terminals.size() == 1) return active;

    const std::size_t rounds = log2_squared_rounds(cfg.c_detect, g.vertex_count());
    const std::size_t stable_limit = log2_squared_rounds(1.0, g.vertex_count());
    std::size_t trigger = std::min<std::size_t>(stable_limit, 4);
    std::size_t stable = 0;
    std::vector<char> removed(g.vertex_count(), 0);
    for (std::size_t round = 0; round < rounds && active.size() >= 2; ++round) {
        // the active set only shrinks, so dropping to half or below already
        // decides the answer
        if (2 * active.size() <= terminals.size()) return {};
        const auto cuts = balanced_decomposition(g, active, tau, rng, counter, assume_connected);
        if (cuts.empty()) {
            if (++stable >= trigger && 2 * active.size() > terminals.size()) {
                if (detail::terminals_connected_at(g, active, tau, counter, assume_connected))
                    return active;
                stable = 0;  // stragglers remain; keep peeling, certify less eagerly
                trigger = std::min(stable_limit, 2 * trigger);
            }
            continue;
        }
        stable = 0;
        std::fill(removed.begin(), removed.end(), 0);
        for (const cut_result& c : cuts)
            for (vertex_id v : c.side) removed[v] = 1;
        std::erase_if(active, [&](vertex_id v) { return removed[v] != 0; });
    }
    if (2 * active.size() <= terminals.size()) return {};
    if (!detail::terminals_connected_at(g, active, tau, counter, assume_connected))
        throw randomized_failure("active set kept a terminal outside the majority component",
                                 rng.seed());
    return active;
}

/// Largest integer tau whose largest tau-connected component holds more than
/// half the terminals, found by binary search over [1, mW], together with that
/// component's terminal part. Validated post hoc (nonempty at tau, empty at
/// tau+1) and retried with a fresh stream on validation failure.
template <class G>
threshold_result find_threshold(const G& g, std::span<const vertex_id> terminals, rng_handle& rng,
                                const engine_config& cfg = {}, flow_counter* counter = nullptr) {
    if (terminals.size() < 2) throw invalid_input_error("find_threshold needs >= 2 terminals");
    const bool connected = g.is_connected();
    if (!connected) throw invalid_input_error("find_threshold requires a connected instance");

    const weight_t hi_bound =
        std::max<weight_t>(1, static_cast<weight_t>(g.edge_count()) * std::max<weight_t>(1, g.max_weight()));

    for (int attempt = 0; attempt < cfg.threshold_retries; ++attempt) {
        rng_handle stream = rng.split();
        try {
            weight_t lo = 1, hi = hi_bound;
            threshold_result best{0, {}};
            while (lo < hi) {
                const weight_t mid = lo + (hi - lo + 1) / 2;
                auto comp = detect_large_cc(g, terminals, mid, stream, cfg, counter, true);
                if (!comp.empty()) {
                    lo = mid;
                    best = {mid, std::move(comp)};
                } else {
                    hi = mid - 1;
                }
            }
            if (best.tau != lo) {
                auto comp = detect_large_cc(g, terminals, lo, stream, cfg, counter, true);
                if (comp.empty()) continue;  // contradicts an earlier nonempty answer; retry
                best = {lo, std::move(comp)};
            }
            if (lo < hi_bound) {
                const auto above = detect_large_cc(g, terminals, lo + 1, stream, cfg, counter, true);
                if (!above.empty()) continue;  // tau not maximal; retry
            }
            return best;
        } catch (const randomized_failure&) {
            // a detect round exhausted its budget; rerun with the next stream
        }
    }
    throw randomized_failure("find_threshold validation kept failing", rng.seed());
}

}  // namespace ghtree

#endif
