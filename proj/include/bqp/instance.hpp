#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bqp/matrix.hpp"
#include "bqp/rational.hpp"

namespace bqp {

using BinaryVector = std::vector<std::uint8_t>;
using SpinVector = std::vector<std::int8_t>;

/// Selects the serial reference kernel or the OpenMP one. Both produce
/// identical results; the serial path exists for differential testing.
enum class Execution { serial, parallel };

/// maximize  x^T Q y + c x + d y + c0  over x in {0,1}^m, y in {0,1}^n.
///
/// Immutable once constructed. m <= n is not enforced; see
/// normalize_orientation().
class Instance {
 public:
    Instance(Matrix q, std::vector<Rational> c, std::vector<Rational> d, Rational c0 = 0);

    /// m x n instance with every coefficient zero.
    static Instance zero(std::size_t m, std::size_t n);

    std::size_t rows() const { return q_.rows(); }
    std::size_t cols() const { return q_.cols(); }

    const Matrix& q() const { return q_; }
    const Rational& q(std::size_t i, std::size_t j) const { return q_(i, j); }
    const std::vector<Rational>& c() const { return c_; }
    const std::vector<Rational>& d() const { return d_; }
    const Rational& c0() const { return c0_; }

    bool is_homogeneous() const;

    /// 1 + sum|q_ij| + sum|c_i| + sum|d_j| + |c0|: exceeds the spread of any
    /// achievable objective value.
    Rational big_m() const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.q_ == b.q_ && a.c_ == b.c_ && a.d_ == b.d_ && a.c0_ == b.c0_;
    }

 private:
    Matrix q_;
    std::vector<Rational> c_;
    std::vector<Rational> d_;
    Rational c0_;
};

/// Same coefficients, variables ranging over {-1, +1}.
struct CutInstance {
    Instance terms;

    std::size_t rows() const { return terms.rows(); }
    std::size_t cols() const { return terms.cols(); }
    friend bool operator==(const CutInstance&, const CutInstance&) = default;
};

struct Solution {
    BinaryVector x;
    BinaryVector y;
    Rational value;
};

struct WeightedEdge {
    std::size_t left;
    std::size_t right;
    Rational weight;
};

/// Bipartite graph with 0-based endpoints; no duplicate (left, right) pairs.
class BipartiteWeightedGraph {
 public:
    BipartiteWeightedGraph(std::size_t left_size, std::size_t right_size, std::vector<WeightedEdge> edges);

    std::size_t left_size() const { return left_; }
    std::size_t right_size() const { return right_; }
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    /// Weight matrix with absent edges as 0.
    Matrix weight_matrix() const;

 private:
    std::size_t left_;
    std::size_t right_;
    std::vector<WeightedEdge> edges_;
};

Rational evaluate_objective(const Instance& inst, std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

/// Cut-form objective; entries of w and z must be +1 or -1.
Rational evaluate_cut_objective(const CutInstance& cut, std::span<const std::int8_t> w, std::span<const std::int8_t> z);

/// Value of the cut induced by the sign vector (sum of weights with w_i != z_j).
Rational cut_value(const BipartiteWeightedGraph& g, std::span<const std::int8_t> w, std::span<const std::int8_t> z);

/// Column scores s_j = sum_i q_ij x_i + d_j for fixed x. The best response
/// is y_j = [s_j > 0].
std::vector<Rational> column_scores(const Instance& inst, std::span<const std::uint8_t> x);

/// True when (value, x, y) should replace the incumbent: larger value, or
/// equal value and (x, y) lexicographically smaller. An incumbent with an
/// empty x is unset and always loses.
bool improves(const Rational& value, const BinaryVector& x, const BinaryVector& y, const Solution& incumbent);

/// Bits of `mask` as a binary vector of the given length (bit i -> entry i).
BinaryVector bits_to_vector(std::uint64_t mask, std::size_t length);

}  // namespace bqp
