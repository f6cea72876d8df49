#pragma once

#include <cstddef>
#include <vector>

#include "bqp/analysis.hpp"
#include "bqp/instance.hpp"

namespace bqp {

/// Indices sorted by weight * key_scale_i + key_offset_i descending, ties
/// by smaller index. Shared by both sides of the additive solver.
std::vector<std::size_t> order_by_key(const std::vector<Rational>& scale, const std::vector<Rational>& offset,
                                      std::size_t weight);

struct AdditiveResult {
    Solution solution;
    std::size_t ones_in_y = 0;  // K
    std::size_t ones_in_x = 0;  // L
};

/// For q_ij = a_i + b_j the objective splits as
///   sum_i (K a_i + c_i) x_i + sum_j (L b_j + d_j) y_j + c0
/// with K = |y| and L = |x|. For each (K, L) the best x takes the top L
/// indices of K a + c and the best y the top K of L b + d; the best pair
/// over all (K, L) is optimal. Ties prefer smaller K, then smaller L.
///
/// Memory is O(mn) small integers (one index order per K and per L) plus
/// O(m) rationals.
AdditiveResult solve_additive(const std::vector<Rational>& a, const std::vector<Rational>& b,
                              const std::vector<Rational>& c, const std::vector<Rational>& d, const Rational& c0,
                              Execution execution = Execution::parallel);

/// Checks that `dec` reproduces inst.Q exactly (PreconditionError
/// otherwise) and solves.
Solution solve_additive(const Instance& inst, const AdditiveDecomposition& dec,
                        Execution execution = Execution::parallel);

}  // namespace bqp
