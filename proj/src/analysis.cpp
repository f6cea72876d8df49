#include "bqp/analysis.hpp"

#include <algorithm>

namespace bqp {

RowEchelon reduced_row_echelon(Matrix m) {
    RowEchelon out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && sgn(m(r, col)) == 0) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j) swap(m(r, j), m(pivot_row, j));

        const Rational inv = 1 / m(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || sgn(m(i, col)) == 0) continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

RankFactorization rank_factorize(const Matrix& q) {
    RowEchelon ech = reduced_row_echelon(q);
    const std::size_t p = ech.pivot_columns.size();
    RankFactorization f;
    f.rank = p;
    f.pivot_columns = ech.pivot_columns;
    f.a = Matrix(q.rows(), p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < q.rows(); ++i) f.a(i, k) = q(i, ech.pivot_columns[k]);
    f.b = Matrix(p, q.cols());
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t j = 0; j < q.cols(); ++j) f.b(k, j) = ech.reduced(k, j);
    return f;
}

Matrix AdditiveDecomposition::matrix() const {
    Matrix q(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) q(i, j) = a[i] + b[j];
    return q;
}

std::optional<AdditiveDecomposition> detect_additive(const Matrix& q) {
    if (q.rows() == 0 || q.cols() == 0) return std::nullopt;
    AdditiveDecomposition dec;
    dec.a.resize(q.rows());
    dec.b.resize(q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i) dec.a[i] = q(i, 0);
    for (std::size_t j = 0; j < q.cols(); ++j) dec.b[j] = q(0, j) - q(0, 0);
    for (std::size_t i = 1; i < q.rows(); ++i)
        for (std::size_t j = 1; j < q.cols(); ++j)
            if (q(i, j) != dec.a[i] + dec.b[j]) return std::nullopt;
    return dec;
}

bool detect_nonnegative(const Matrix& q) {
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (const auto& v : q.row(i))
            if (sgn(v) < 0) return false;
    return true;
}

namespace {

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj, std::vector<long>& match_left,
             std::vector<long>& match_right, std::vector<char>& visited) {
    for (std::size_t v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = 1;
        if (match_right[v] < 0 ||
            augment(static_cast<std::size_t>(match_right[v]), adj, match_left, match_right, visited)) {
            match_left[u] = static_cast<long>(v);
            match_right[v] = static_cast<long>(u);
            return true;
        }
    }
    return false;
}

}  // namespace

BipartiteMatching maximum_matching(std::size_t left, std::size_t right,
                                   const std::vector<std::vector<std::size_t>>& adjacency) {
    BipartiteMatching m;
    m.match_left.assign(left, -1);
    m.match_right.assign(right, -1);
    std::vector<char> visited(right);
    for (std::size_t u = 0; u < left; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(u, adjacency, m.match_left, m.match_right, visited)) ++m.size;
    }
    return m;
}

Eliminator konig_cover(std::size_t left, std::size_t right, const std::vector<std::vector<std::size_t>>& adjacency,
                       const BipartiteMatching& matching) {
    std::vector<char> left_reached(left), right_reached(right);
    std::vector<std::size_t> stack;
    for (std::size_t u = 0; u < left; ++u) {
        if (matching.match_left[u] < 0) {
            left_reached[u] = 1;
            stack.push_back(u);
        }
    }
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adjacency[u]) {
            // non-matching edge left -> right, then matching edge right -> left
            if (right_reached[v] || matching.match_left[u] == static_cast<long>(v)) continue;
            right_reached[v] = 1;
            long w = matching.match_right[v];
            if (w >= 0 && !left_reached[static_cast<std::size_t>(w)]) {
                left_reached[static_cast<std::size_t>(w)] = 1;
                stack.push_back(static_cast<std::size_t>(w));
            }
        }
    }
    Eliminator cover;
    for (std::size_t u = 0; u < left; ++u)
        if (!left_reached[u]) cover.rows.push_back(u);
    for (std::size_t v = 0; v < right; ++v)
        if (right_reached[v]) cover.cols.push_back(v);
    return cover;
}

Eliminator min_negative_eliminator(const Matrix& q) {
    std::vector<std::vector<std::size_t>> adj(q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            if (sgn(q(i, j)) < 0) adj[i].push_back(j);
    auto matching = maximum_matching(q.rows(), q.cols(), adj);
    return konig_cover(q.rows(), q.cols(), adj, matching);
}

}  // namespace bqp
