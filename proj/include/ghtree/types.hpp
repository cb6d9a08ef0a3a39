#ifndef GHTREE_TYPES_HPP
#define GHTREE_TYPES_HPP

#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghtree {

using vertex_id = std::uint32_t;
using weight_t = std::int64_t;

inline constexpr vertex_id invalid_vertex = static_cast<vertex_id>(-1);

class invalid_input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class oracle_refused_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a randomized routine failed its post-hoc validation even after
/// the configured number of reseeded retries. Carries the seed for replay.
class randomized_failure : public std::runtime_error {
public:
    randomized_failure(const std::string& what, std::uint64_t seed)
        : std::runtime_error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Counts maxflow invocations together with the sizes of the instances they
// ran on. Shared across concurrent solver calls, hence atomic.
struct flow_counter {
    std::atomic<std::uint64_t> calls{0};
    std::atomic<std::uint64_t> instance_size_sum{0};

    void record(std::uint64_t instance_size) {
        calls.fetch_add(1, std::memory_order_relaxed);
        instance_size_sum.fetch_add(instance_size, std::memory_order_relaxed);
    }
};

/// Splittable deterministic random stream (splitmix64). Identical seed and
/// call sequence give identical outputs on every platform; split() derives an
/// independent child stream so sibling computations can consume randomness
/// without interfering.
class rng_handle {
public:
    explicit rng_handle(std::uint64_t seed) : state_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    rng_handle split() { return rng_handle(next() ^ 0xA3EC647659359ACDull); }

    /// Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw internal_error("rng_handle::below needs a positive bound");
        const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound | 1);
        for (;;) {
            const std::uint64_t r = next() & mask;
            if (r < bound) return r;
        }
    }

    /// Uniform in [lo, hi] inclusive.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    /// True with probability 2^-j, 1 <= j <= 63.
    bool coin_pow2(unsigned j) { return (next() >> (64u - j)) == 0; }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
    std::uint64_t seed_;
};

/// Sorted, duplicate-free terminal list. All algorithms iterate terminals in
/// this order, which is what makes seeded runs reproducible.
std::vector<vertex_id> normalize_terminals(std::vector<vertex_id> ids, std::size_t vertex_count);

/// True if `ids` is sorted, duplicate-free and within [0, vertex_count).
bool valid_terminal_set(const std::vector<vertex_id>& ids, std::size_t vertex_count);

}  // namespace ghtree

#endif
