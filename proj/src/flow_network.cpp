#include "ghtree/detail/flow_network.hpp"

#include <algorithm>
#include <limits>

namespace ghtree::detail {

dinic_network::dinic_network(std::uint32_t node_count) : n_(node_count) {}

void dinic_network::add_arc(std::uint32_t u, std::uint32_t v, weight_t cap, weight_t rev_cap) {
    to_.push_back(v);
    cap_.push_back(cap);
    tail_.push_back(u);
    to_.push_back(u);
    cap_.push_back(rev_cap);
    tail_.push_back(v);
}

bool dinic_network::bfs_levels() {
    std::fill(level_.begin(), level_.end(), n_);
    level_[s_] = 0;
    queue_.clear();
    queue_.push_back(s_);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const std::uint32_t v = queue_[head];
        for (std::uint32_t i = off_[v]; i < off_[v + 1]; ++i) {
            const std::uint32_t a = arcs_[i];
            const std::uint32_t w = to_[a];
            if (cap_[a] > 0 && level_[w] == n_) {
                level_[w] = level_[v] + 1;
                queue_.push_back(w);
            }
        }
    }
    return level_[t_] != n_;
}

weight_t dinic_network::dfs_push(std::uint32_t v, weight_t limit) {
    if (v == t_) return limit;
    weight_t pushed = 0;
    for (std::uint32_t& i = cur_[v]; i < off_[v + 1]; ++i) {
        const std::uint32_t a = arcs_[i];
        const std::uint32_t w = to_[a];
        if (cap_[a] <= 0 || level_[w] != level_[v] + 1) continue;
        const weight_t got = dfs_push(w, std::min(limit - pushed, cap_[a]));
        if (got > 0) {
            cap_[a] -= got;
            cap_[a ^ 1] += got;
            pushed += got;
            if (pushed == limit) return pushed;
        } else {
            level_[w] = n_;  // dead end for this phase
        }
    }
    return pushed;
}

weight_t dinic_network::run(std::uint32_t s, std::uint32_t t, weight_t limit) {
    s_ = s;
    t_ = t;
    // CSR over arc tails
    off_.assign(n_ + 1, 0);
    for (std::uint32_t tail : tail_) ++off_[tail + 1];
    for (std::uint32_t v = 0; v < n_; ++v) off_[v + 1] += off_[v];
    arcs_.resize(to_.size());
    std::vector<std::uint32_t> cursor(off_.begin(), off_.end() - 1);
    for (std::uint32_t a = 0; a < to_.size(); ++a) arcs_[cursor[tail_[a]]++] = a;

    level_.resize(n_);
    cur_.resize(n_);
    queue_.reserve(n_);

    weight_t value = 0;
    while (value < limit && bfs_levels()) {
        std::copy(off_.begin(), off_.end() - 1, cur_.begin());
        value += dfs_push(s_, limit - value);
    }
    return value;
}

std::vector<char> dinic_network::source_side_mask() const {
    std::vector<char> mark(n_, 0);
    std::vector<std::uint32_t> stack{s_};
    mark[s_] = 1;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t i = off_[v]; i < off_[v + 1]; ++i) {
            const std::uint32_t a = arcs_[i];
            if (cap_[a] > 0 && !mark[to_[a]]) {
                mark[to_[a]] = 1;
                stack.push_back(to_[a]);
            }
        }
    }
    return mark;
}

ek_network::ek_network(std::uint32_t node_count) : n_(node_count), out_(node_count) {}

void ek_network::add_arc(std::uint32_t u, std::uint32_t v, weight_t cap, weight_t rev_cap) {
    out_[u].push_back(static_cast<std::uint32_t>(to_.size()));
    to_.push_back(v);
    cap_.push_back(cap);
    out_[v].push_back(static_cast<std::uint32_t>(to_.size()));
    to_.push_back(u);
    cap_.push_back(rev_cap);
}

weight_t ek_network::run(std::uint32_t s, std::uint32_t t) {
    s_ = s;
    weight_t value = 0;
    std::vector<std::uint32_t> parent_arc(n_);
    std::vector<char> seen(n_);
    std::vector<std::uint32_t> queue;
    for (;;) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        bool reached = false;
        for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
            const std::uint32_t v = queue[head];
            for (std::uint32_t a : out_[v]) {
                if (cap_[a] <= 0 || seen[to_[a]]) continue;
                seen[to_[a]] = 1;
                parent_arc[to_[a]] = a;
                if (to_[a] == t) {
                    reached = true;
                    break;
                }
                queue.push_back(to_[a]);
            }
        }
        if (!reached) break;
        weight_t bottleneck = std::numeric_limits<weight_t>::max();
        for (std::uint32_t v = t; v != s; v = to_[parent_arc[v] ^ 1])
            bottleneck = std::min(bottleneck, cap_[parent_arc[v]]);
        for (std::uint32_t v = t; v != s; v = to_[parent_arc[v] ^ 1]) {
            cap_[parent_arc[v]] -= bottleneck;
            cap_[parent_arc[v] ^ 1] += bottleneck;
        }
        value += bottleneck;
    }
    return value;
}

std::vector<char> ek_network::source_side_mask() const {
    std::vector<char> mark(n_, 0);
    std::vector<std::uint32_t> stack{s_};
    mark[s_] = 1;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t a : out_[v]) {
            if (cap_[a] > 0 && !mark[to_[a]]) {
                mark[to_[a]] = 1;
                stack.push_back(to_[a]);
            }
        }
    }
    return mark;
}

}  // namespace ghtree::detail
