#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bqp/matrix.hpp"

namespace bqp {

/// Q = A * B with A (m x p) the pivot columns of Q and B (p x n) the
/// nonzero rows of its reduced row echelon form.
struct RankFactorization {
    std::size_t rank = 0;
    Matrix a;
    Matrix b;
    std::vector<std::size_t> pivot_columns;
};

/// Exact reduced row echelon form; pivots are chosen as the first nonzero
/// entry in column order.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

RowEchelon reduced_row_echelon(Matrix m);
RankFactorization rank_factorize(const Matrix& q);

/// q_ij = a_i + b_j.
struct AdditiveDecomposition {
    std::vector<Rational> a;
    std::vector<Rational> b;

    /// Reconstructs the m x n matrix.
    Matrix matrix() const;
};

/// Decomposition with a_i = q_i1 and b_j = q_1j - q_11, or nullopt when
/// some q_ij - q_i1 - q_1j + q_11 is nonzero.
std::optional<AdditiveDecomposition> detect_additive(const Matrix& q);

bool detect_nonnegative(const Matrix& q);

/// Rows and columns whose deletion leaves Q without negative entries.
struct Eliminator {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    std::size_t size() const { return rows.size() + cols.size(); }
};

/// Maximum bipartite matching. `adjacency[u]` lists right neighbours of
/// left vertex u. match_left[u] / match_right[v] hold the partner or -1.
struct BipartiteMatching {
    std::size_t size = 0;
    std::vector<long> match_left;
    std::vector<long> match_right;
};

BipartiteMatching maximum_matching(std::size_t left, std::size_t right,
                                   const std::vector<std::vector<std::size_t>>& adjacency);

/// Minimum vertex cover from a maximum matching (Konig): with Z the
/// vertices reachable from unmatched left vertices along alternating
/// paths, the cover is (L \ Z) + (R & Z).
Eliminator konig_cover(std::size_t left, std::size_t right, const std::vector<std::vector<std::size_t>>& adjacency,
                       const BipartiteMatching& matching);

/// Minimum negative eliminator: minimum vertex cover of the graph with an
/// edge (i, j) for every q_ij < 0.
Eliminator min_negative_eliminator(const Matrix& q);

}  // namespace bqp
