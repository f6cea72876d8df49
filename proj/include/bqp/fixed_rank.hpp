#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bqp/instance.hpp"

namespace bqp {

/// Partition of {0..m-1} into basic (ordered), at-lower-bound and
/// at-upper-bound indices for the multiparametric LP
///   max c x  s.t.  A^T x = lambda,  x in [0,1]^m
/// where column i of the constraint matrix is row i of A (m x p).
struct BasisStructure {
    std::vector<std::size_t> basic;
    std::vector<std::size_t> lower;
    std::vector<std::size_t> upper;
    Matrix inverse;  // inverse of the p x p basis matrix
};

/// Sign of a reduced cost under the symbolic perturbation
/// c_i -> c_i + eps^(i+1): the first nonzero of (base, coefficients by
/// variable index). Never zero for a nonbasic variable.
struct ReducedCostSign {
    Rational base;
    std::vector<std::pair<std::size_t, Rational>> perturbation;  // sorted by index

    int sign() const;
};

/// Inverse of a square matrix by exact Gauss-Jordan; nullopt when singular.
std::optional<Matrix> invert(const Matrix& m);

/// One structure per nonsingular p-subset (lexicographic subset order):
/// nonbasic j goes to `lower` when its perturbed reduced cost
/// c_B B^-1 A_j - c_j is positive and to `upper` when negative.
/// Throws PreconditionError if A does not have full column rank.
std::vector<BasisStructure> enumerate_dual_feasible_bases(const Matrix& a, const std::vector<Rational>& c);

/// The 2^p binary vectors with basic entries set to tau in {0,1}^p and
/// nonbasic entries fixed by lower/upper. Bit k of the enumeration index is
/// tau_k.
std::vector<BinaryVector> candidates_from_basis(const BasisStructure& bs, std::size_t m);

struct FixedRankOptions {
    std::size_t p_limit = 6;
    /// Superset mode for testing: every nonsingular basis with every
    /// lower/upper split of the nonbasic indices.
    bool dual_filter = true;
    Execution execution = Execution::parallel;
};

struct FixedRankResult {
    Solution solution;
    std::size_t rank = 0;
    std::size_t bases = 0;
    std::size_t candidates = 0;
};

/// Factorizes Q = A B, enumerates candidates from every basis structure and
/// completes each x with y_j = [d_j + sum_k b_kj (a^k x) > 0]. Ties go to
/// the lexicographically smallest (x, y).
///
/// Throws RefusalError when rank(Q) > p_limit.
FixedRankResult solve_fixed_rank(const Instance& inst, const FixedRankOptions& options = {});

}  // namespace bqp
