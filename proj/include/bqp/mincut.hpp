#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bqp/analysis.hpp"
#include "bqp/instance.hpp"

namespace bqp {

struct Arc {
    std::size_t from;
    std::size_t to;
    Rational capacity;
};

struct FlowNetwork {
    std::size_t nodes = 0;
    std::size_t source = 0;
    std::size_t sink = 1;
    std::vector<Arc> arcs;
};

struct FlowResult {
    Rational value;
    /// source_side[v] is true when v is reachable from the source in the
    /// final residual network (the smallest minimum-cut source side).
    std::vector<bool> source_side;
};

/// Exact maximum flow by level-graph blocking flows (Dinic).
FlowResult max_flow(const FlowNetwork& net);

/// Capacity of the arcs leaving `source_side`.
Rational cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side);

/// Node of x_i / y_j in the network built below.
inline std::size_t x_node(std::size_t i) { return 2 + i; }
inline std::size_t y_node(std::size_t m, std::size_t j) { return 2 + m + j; }

struct CutNetwork {
    FlowNetwork network;
    Rational offset;
};

/// Selection network for nonnegative Q (source side = variable at 1):
///   s -> x_i  with R_i + max(c_i, 0), R_i = sum_j q_ij
///   x_i -> y_j with q_ij for q_ij > 0
///   x_i -> t  with -c_i for c_i < 0
///   s -> y_j  with d_j for d_j > 0,  y_j -> t with -d_j for d_j < 0
/// offset = sum q + sum c+ + sum d+ + c0. For every labelling,
/// f(x, y) = offset - capacity of the induced cut.
CutNetwork build_cut_network(const Instance& inst);

/// Maximizes via minimum cut. Requires every q_ij >= 0.
Solution solve_nonnegative(const Instance& inst);

/// The instance restricted to free variables after fixing some of them.
/// The objective over free variables (including `q`, `c`, `d`, `constant`)
/// equals the original objective with the fixings applied.
struct ReducedInstance {
    std::vector<std::int8_t> fixed_x;  // -1 free, else 0/1
    std::vector<std::int8_t> fixed_y;
    std::vector<std::size_t> free_rows;
    std::vector<std::size_t> free_cols;
    Matrix q;
    std::vector<Rational> c;
    std::vector<Rational> d;
    Rational constant;

    /// Original-size solution from free-variable assignments.
    Solution expand(const BinaryVector& x_free, const BinaryVector& y_free, Rational value) const;
};

/// Fixed x_i = 1 adds row i of Q to d and c_i to the constant; fixed
/// y_j = 1 adds column j to c and d_j to the constant; both at 1 adds q_ij.
ReducedInstance fold_fixings(const Instance& inst, const std::vector<std::int8_t>& fixed_x,
                             const std::vector<std::int8_t>& fixed_y);

Rational evaluate_reduced(const ReducedInstance& r, const BinaryVector& x_free, const BinaryVector& y_free);

/// Optimizes a reduced instance whose matrix is nonnegative (either side
/// may be empty).
Solution solve_reduced(const ReducedInstance& r);

struct EliminatorOptions {
    std::size_t size_limit = 25;
    Execution execution = Execution::parallel;
};

/// Tries all 2^|S| 0/1 fixings of the eliminator's rows and columns and
/// solves each nonnegative remainder by min cut. Ties go to the
/// lexicographically smallest (x, y). Throws RefusalError beyond the limit.
Solution solve_with_eliminator(const Instance& inst, const Eliminator& elim, const EliminatorOptions& options = {});

}  // namespace bqp
