#include "bqp/instance.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bqp/error.hpp"

namespace bqp {

Instance::Instance(Matrix q, std::vector<Rational> c, std::vector<Rational> d, Rational c0)
    : q_(std::move(q)), c_(std::move(c)), d_(std::move(d)), c0_(std::move(c0)) {
    if (q_.rows() < 1 || q_.cols() < 1) throw DimensionError("instance needs m >= 1 and n >= 1");
    if (c_.size() != q_.rows())
        throw DimensionError("c has " + std::to_string(c_.size()) + " entries, expected " + std::to_string(q_.rows()));
    if (d_.size() != q_.cols())
        throw DimensionError("d has " + std::to_string(d_.size()) + " entries, expected " + std::to_string(q_.cols()));
}

Instance Instance::zero(std::size_t m, std::size_t n) {
    return Instance(Matrix(m, n), std::vector<Rational>(m), std::vector<Rational>(n), 0);
}

bool Instance::is_homogeneous() const {
    auto zero = [](const Rational& v) { return sgn(v) == 0; };
    return std::all_of(c_.begin(), c_.end(), zero) && std::all_of(d_.begin(), d_.end(), zero) && sgn(c0_) == 0;
}

Rational Instance::big_m() const {
    Rational total = 1;
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& v : q_.row(i)) total += abs(v);
    for (const auto& v : c_) total += abs(v);
    for (const auto& v : d_) total += abs(v);
    total += abs(c0_);
    return total;
}

BipartiteWeightedGraph::BipartiteWeightedGraph(std::size_t left_size, std::size_t right_size,
                                               std::vector<WeightedEdge> edges)
    : left_(left_size), right_(right_size), edges_(std::move(edges)) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges_) {
        if (e.left >= left_ || e.right >= right_) throw DimensionError("edge endpoint out of range");
        if (!seen.emplace(e.left, e.right).second)
            throw PreconditionError("duplicate edge (" + std::to_string(e.left + 1) + ", " +
                                    std::to_string(e.right + 1) + ")");
    }
}

Matrix BipartiteWeightedGraph::weight_matrix() const {
    Matrix w(left_, right_);
    for (const auto& e : edges_) w(e.left, e.right) = e.weight;
    return w;
}

Rational evaluate_objective(const Instance& inst, std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
    if (x.size() != inst.rows() || y.size() != inst.cols())
        throw DimensionError("solution vector length does not match instance");
    Rational value = inst.c0();
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        if (!x[i]) continue;
        value += inst.c()[i];
        auto row = inst.q().row(i);
        for (std::size_t j = 0; j < inst.cols(); ++j)
            if (y[j]) value += row[j];
    }
    for (std::size_t j = 0; j < inst.cols(); ++j)
        if (y[j]) value += inst.d()[j];
    return value;
}

Rational evaluate_cut_objective(const CutInstance& cut, std::span<const std::int8_t> w, std::span<const std::int8_t> z) {
    const Instance& t = cut.terms;
    if (w.size() != t.rows() || z.size() != t.cols())
        throw DimensionError("sign vector length does not match instance");
    auto is_sign = [](std::int8_t v) { return v == 1 || v == -1; };
    if (!std::all_of(w.begin(), w.end(), is_sign) || !std::all_of(z.begin(), z.end(), is_sign))
        throw PreconditionError("sign vectors must hold +1 or -1");
    Rational value = t.c0();
    for (std::size_t i = 0; i < t.rows(); ++i) {
        Rational row_sum = 0;
        auto row = t.q().row(i);
        for (std::size_t j = 0; j < t.cols(); ++j) {
            if (z[j] > 0) row_sum += row[j];
            else row_sum -= row[j];
        }
        row_sum += t.c()[i];
        if (w[i] > 0) value += row_sum;
        else value -= row_sum;
    }
    for (std::size_t j = 0; j < t.cols(); ++j) {
        if (z[j] > 0) value += t.d()[j];
        else value -= t.d()[j];
    }
    return value;
}

Rational cut_value(const BipartiteWeightedGraph& g, std::span<const std::int8_t> w, std::span<const std::int8_t> z) {
    if (w.size() != g.left_size() || z.size() != g.right_size())
        throw DimensionError("sign vector length does not match graph");
    Rational value = 0;
    for (const auto& e : g.edges())
        if (w[e.left] != z[e.right]) value += e.weight;
    return value;
}

std::vector<Rational> column_scores(const Instance& inst, std::span<const std::uint8_t> x) {
    if (x.size() != inst.rows()) throw DimensionError("x length does not match instance");
    std::vector<Rational> scores = inst.d();
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        if (!x[i]) continue;
        auto row = inst.q().row(i);
        for (std::size_t j = 0; j < inst.cols(); ++j) scores[j] += row[j];
    }
    return scores;
}

bool improves(const Rational& value, const BinaryVector& x, const BinaryVector& y, const Solution& incumbent) {
    if (incumbent.x.empty()) return true;
    int order = cmp(value, incumbent.value);
    if (order != 0) return order > 0;
    if (x != incumbent.x) return x < incumbent.x;
    return y < incumbent.y;
}

BinaryVector bits_to_vector(std::uint64_t mask, std::size_t length) {
    BinaryVector out(length);
    for (std::size_t i = 0; i < length; ++i) out[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
    return out;
}

}  // namespace bqp
