#include "bqp/transform.hpp"

#include "bqp/error.hpp"

namespace bqp {

namespace {

Rational total(const Matrix& q) {
    Rational s = 0;
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (const auto& v : q.row(i)) s += v;
    return s;
}

Rational total(const std::vector<Rational>& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
}

std::vector<Rational> row_sums(const Matrix& q) {
    std::vector<Rational> out(q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (const auto& v : q.row(i)) out[i] += v;
    return out;
}

std::vector<Rational> col_sums(const Matrix& q) {
    std::vector<Rational> out(q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i) {
        auto row = q.row(i);
        for (std::size_t j = 0; j < q.cols(); ++j) out[j] += row[j];
    }
    return out;
}

}  // namespace

Rational evaluate_qp01(const Qp01Problem& problem, std::span<const std::uint8_t> w) {
    const std::size_t n = problem.size();
    if (w.size() != n || problem.c.size() != n || problem.q.cols() != n)
        throw DimensionError("qp01 dimension mismatch");
    Rational value = problem.c0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!w[i]) continue;
        value += problem.c[i];
        auto row = problem.q.row(i);
        for (std::size_t j = 0; j < n; ++j)
            if (w[j]) value += row[j];
    }
    return value;
}

Oriented normalize_orientation(const Instance& inst) {
    if (inst.rows() <= inst.cols()) return {inst, false};
    return {Instance(inst.q().transposed(), inst.d(), inst.c(), inst.c0()), true};
}

Solution orient_back(Solution s, bool transposed) {
    if (transposed) std::swap(s.x, s.y);
    return s;
}

Homogeneous to_homogeneous(const Instance& inst) {
    const std::size_t m = inst.rows();
    const std::size_t n = inst.cols();
    Rational big_m = inst.big_m();
    Matrix q(m + 1, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) q(i, j) = inst.q(i, j);
        q(i, n) = inst.c()[i];
    }
    for (std::size_t j = 0; j < n; ++j) q(m, j) = inst.d()[j];
    q(m, n) = big_m;
    return {Instance(std::move(q), std::vector<Rational>(m + 1), std::vector<Rational>(n + 1), 0), big_m};
}

CutInstance bqp01_to_cut(const Instance& inst) {
    const std::size_t m = inst.rows();
    const std::size_t n = inst.cols();
    Matrix q(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = inst.q(i, j) / 4;
    auto rs = row_sums(inst.q());
    auto cs = col_sums(inst.q());
    std::vector<Rational> c(m), d(n);
    for (std::size_t i = 0; i < m; ++i) c[i] = rs[i] / 4 + inst.c()[i] / 2;
    for (std::size_t j = 0; j < n; ++j) d[j] = cs[j] / 4 + inst.d()[j] / 2;
    Rational c0 = total(inst.q()) / 4 + total(inst.c()) / 2 + total(inst.d()) / 2 + inst.c0();
    return {Instance(std::move(q), std::move(c), std::move(d), std::move(c0))};
}

Instance cut_to_bqp01(const CutInstance& cut) {
    const Instance& t = cut.terms;
    const std::size_t m = t.rows();
    const std::size_t n = t.cols();
    Matrix q(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = 4 * t.q(i, j);
    auto rs = row_sums(t.q());
    auto cs = col_sums(t.q());
    std::vector<Rational> c(m), d(n);
    for (std::size_t i = 0; i < m; ++i) c[i] = 2 * (t.c()[i] - rs[i]);
    for (std::size_t j = 0; j < n; ++j) d[j] = 2 * (t.d()[j] - cs[j]);
    Rational c0 = total(t.q()) - total(t.c()) - total(t.d()) + t.c0();
    return Instance(std::move(q), std::move(c), std::move(d), std::move(c0));
}

Qp01Embedding qp01_to_bqp01(const Qp01Problem& problem, std::optional<Rational> big_m) {
    const std::size_t n = problem.size();
    if (problem.q.cols() != n) throw DimensionError("qp01 matrix must be square");
    if (problem.c.size() != n) throw DimensionError("qp01 linear term length mismatch");
    Rational m_value;
    if (big_m) {
        m_value = *big_m;
    } else {
        m_value = 1 + abs(problem.c0);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& v : problem.q.row(i)) m_value += abs(v);
        for (const auto& v : problem.c) m_value += abs(v);
    }
    Matrix q = problem.q;
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        q(i, i) += 2 * m_value;
        c[i] = problem.c[i] / 2 - m_value;
    }
    std::vector<Rational> d = c;
    return {Instance(std::move(q), std::move(c), std::move(d), problem.c0), m_value};
}

Qp01Problem bqp01_to_qp01(const Instance& inst) {
    const std::size_t m = inst.rows();
    const std::size_t n = inst.cols();
    Matrix q(m + n, m + n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, m + j) = inst.q(i, j);
    std::vector<Rational> c(inst.c());
    c.insert(c.end(), inst.d().begin(), inst.d().end());
    return {std::move(q), std::move(c), inst.c0()};
}

BipartiteWeightedGraph bqp11h_to_bmaxcut(const CutInstance& cut) {
    const Instance& t = cut.terms;
    if (!t.is_homogeneous()) throw PreconditionError("B-MaxCut reduction needs a homogeneous cut instance");
    std::vector<WeightedEdge> edges;
    edges.reserve(t.rows() * t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) edges.push_back({i, j, -2 * t.q(i, j)});
    return BipartiteWeightedGraph(t.rows(), t.cols(), std::move(edges));
}

CutInstance bmaxcut_to_bqp11h(const BipartiteWeightedGraph& g) {
    Matrix q(g.left_size(), g.right_size());
    for (const auto& e : g.edges()) q(e.left, e.right) = -e.weight / 2;
    return {Instance(std::move(q), std::vector<Rational>(g.left_size()), std::vector<Rational>(g.right_size()), 0)};
}

Instance mwbp_to_bqp01(const BipartiteWeightedGraph& g) {
    Rational big_m = 1;
    for (const auto& e : g.edges()) {
        if (sgn(e.weight) <= 0)
            throw PreconditionError("biclique weights must be positive; edge (" + std::to_string(e.left + 1) + ", " +
                                    std::to_string(e.right + 1) + ") has " + to_string(e.weight));
        big_m += e.weight;
    }
    const std::size_t m = g.left_size();
    const std::size_t n = g.right_size();
    Matrix q(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = -big_m;
    for (const auto& e : g.edges()) q(e.left, e.right) = e.weight;
    return Instance(std::move(q), std::vector<Rational>(m), std::vector<Rational>(n), 0);
}

Instance rank1_binary_approx_to_bqp01(const Matrix& h) {
    Matrix q(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            const Rational& v = h(i, j);
            if (v != 0 && v != 1)
                throw PreconditionError("entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                        ") of H is not binary");
            q(i, j) = 1 - 2 * v;
        }
    }
    return Instance(std::move(q), std::vector<Rational>(h.rows()), std::vector<Rational>(h.cols()), 0);
}

Rational rank1_approx_error(const Matrix& h, std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
    if (u.size() != h.rows() || v.size() != h.cols()) throw DimensionError("approximation factor length mismatch");
    Rational err = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            Rational diff = h(i, j) - (u[i] && v[j] ? 1 : 0);
            err += diff * diff;
        }
    }
    return err;
}

Instance negated(const Instance& inst) {
    Matrix q(inst.rows(), inst.cols());
    for (std::size_t i = 0; i < inst.rows(); ++i)
        for (std::size_t j = 0; j < inst.cols(); ++j) q(i, j) = -inst.q(i, j);
    std::vector<Rational> c(inst.c()), d(inst.d());
    for (auto& v : c) v = -v;
    for (auto& v : d) v = -v;
    return Instance(std::move(q), std::move(c), std::move(d), -inst.c0());
}

}  // namespace bqp
