#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bqp/instance.hpp"

namespace bqp {

/// SplitMix64 (Steele, Lea, Flood). Small, seedable, identical on every
/// platform, which keeps generated instances reproducible.
class SplitMix64 {
 public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

 private:
    std::uint64_t state_;
};

struct GeneratorParams {
    std::int64_t max_abs = 9;  // entries drawn from [-max_abs, max_abs]
    bool linear_terms = true;  // false: c = d = 0, c0 = 0
};

/// Kinds: `general`, `rank<p>` (Q = A B with random integer factors and
/// rank exactly min(p, m, n)), `additive`, `nonnegative`,
/// `sparse-negative<k>` (nonnegative Q with at most k negative entries, so
/// the minimum eliminator has size <= k). Deterministic in `seed`.
/// Throws std::invalid_argument for an unknown kind or zero size.
Instance generate_instance(std::string_view kind, std::size_t m, std::size_t n, std::uint64_t seed,
                           const GeneratorParams& params = {});

}  // namespace bqp
