#pragma once

#include <cstddef>
#include <span>

#include "bqp/instance.hpp"

namespace bqp {

struct EnumerationOptions {
    std::size_t m_limit = 25;
    Execution execution = Execution::parallel;
};

/// Best response to a fixed x: y_j = 1 iff sum_i q_ij x_i + d_j > 0
/// (ties go to 0). Returns the completed solution.
Solution best_y_for_x(const Instance& inst, std::span<const std::uint8_t> x);

/// Exact maximizer over all 2^m choices of x, each completed by
/// best_y_for_x(). x is walked in Gray-code order so each step updates the
/// n column scores for a single flipped row. Among optimal x the
/// lexicographically smallest is returned, for both execution modes.
///
/// Throws RefusalError when m exceeds options.m_limit (hard cap 62).
Solution solve_enumeration(const Instance& inst, const EnumerationOptions& options = {});

/// Brute force over all 2^(m+n) assignments with naive evaluation.
/// Test oracle; refuses beyond m + n > limit (default 24).
Solution solve_oracle(const Instance& inst, std::size_t limit = 24);

}  // namespace bqp
