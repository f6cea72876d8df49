#pragma once

#include <optional>
#include <span>

#include "bqp/instance.hpp"

namespace bqp {

/// maximize  w^T Q w + c w + c0  over w in {0,1}^n.
struct Qp01Problem {
    Matrix q;
    std::vector<Rational> c;
    Rational c0;

    std::size_t size() const { return q.rows(); }
};

Rational evaluate_qp01(const Qp01Problem& problem, std::span<const std::uint8_t> w);

struct Oriented {
    Instance instance;
    bool transposed;
};

/// Transposes Q (and swaps c with d) when m > n so that m <= n afterwards.
/// A solution (x, y) of the result maps back as (y, x) when transposed.
Oriented normalize_orientation(const Instance& inst);

/// Undo normalize_orientation() on a solution.
Solution orient_back(Solution s, bool transposed);

struct Homogeneous {
    Instance instance;  // (m+1) x (n+1), c = d = 0, c0 = 0
    Rational big_m;     // value placed in the bottom-right corner
};

/// Borders Q with c (last column) and d (last row) and puts big_m in the
/// corner. Every optimum has both extra coordinates at 1, and on that face
/// the homogeneous value equals f(x, y) - c0 + big_m.
Homogeneous to_homogeneous(const Instance& inst);

/// Substitutes x = (w + e)/2, y = (z + e)/2: phi(w, z) == f(x, y).
CutInstance bqp01_to_cut(const Instance& inst);

/// Substitutes x = 2w - e, y = 2z - e: f(w, z) == phi(x, y). Inverse of
/// bqp01_to_cut().
Instance cut_to_bqp01(const CutInstance& cut);

struct Qp01Embedding {
    Instance instance;
    Rational big_m;
};

/// Q = Q' + 2M I, c = d = c'/2 - M e. Any (x, y) with x != y loses exactly
/// M per mismatched index, so optima satisfy x == y. Without an explicit M
/// the bound 1 + sum|q'| + sum|c'| + |c0'| is used.
Qp01Embedding qp01_to_bqp01(const Qp01Problem& problem, std::optional<Rational> big_m = std::nullopt);

/// Block form with Q in the upper-right m x n block: for w = (x | y),
/// w^T Q w + (c | d) w + c0 == f(x, y).
Qp01Problem bqp01_to_qp01(const Instance& inst);

/// Complete K_{m,n} with weight -2 q_ij. For every sign vector
/// phi(w, z) == sum(q) - 2 * (sum of q_ij over cut pairs), hence
/// max phi == sum(q) + max cut. Requires a homogeneous cut instance.
BipartiteWeightedGraph bqp11h_to_bmaxcut(const CutInstance& cut);

/// q_ij = -w_ij / 2 (0 for absent edges). For every sign vector the cut
/// value equals sum(w)/2 + phi(w, z).
CutInstance bmaxcut_to_bqp11h(const BipartiteWeightedGraph& g);

/// Maximum weight biclique: q_ij = w_ij on edges and -M elsewhere with
/// M = 1 + sum(w). All weights must be positive.
Instance mwbp_to_bqp01(const BipartiteWeightedGraph& g);

/// q_ij = 1 - 2 h_ij for binary H. For binary (u, v),
/// sum (h_ij - u_i v_j)^2 == sum(h) + f(u, v), so a minimizer of the
/// returned objective is a best rank-one binary approximation.
Instance rank1_binary_approx_to_bqp01(const Matrix& h);

/// sum_ij (h_ij - u_i v_j)^2.
Rational rank1_approx_error(const Matrix& h, std::span<const std::uint8_t> u, std::span<const std::uint8_t> v);

/// Instance with every coefficient negated (turns minimization into
/// maximization).
Instance negated(const Instance& inst);

}  // namespace bqp
