#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "bqp/generate.hpp"
#include "bqp/instance.hpp"

namespace testing {

using bqp::Instance;
using bqp::Matrix;
using bqp::Rational;

inline std::vector<Rational> vec(std::initializer_list<Rational> v) { return v; }

inline Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<std::vector<Rational>> r;
    for (auto row : rows) r.emplace_back(row);
    return Matrix::from_rows(r);
}

inline Matrix outer(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Matrix q(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) q(i, j) = a[i] * b[j];
    return q;
}

inline Instance fig1() {
    auto a = vec({2, 2, -3, 4, -2});
    auto b = vec({1, 1, -4, 0, -1, -2, 1});
    return Instance(outer(a, b), vec({4, 5, 6, 10, 5}), vec({5, -2, 3, 3, 4, 0, 2}), 0);
}
inline Instance t1() { return Instance(mat({{1, -2}, {3, 0}}), vec({1, -1}), vec({0, 2}), 0); }
inline Instance tadd() { return Instance(mat({{3, -2}, {1, -4}}), vec({0, 0}), vec({0, 0}), 0); }
inline Instance tnn() { return Instance(mat({{1}}), vec({-2}), vec({0}), 0); }

inline bqp::BinaryVector bits(std::initializer_list<int> v) {
    bqp::BinaryVector out;
    for (int b : v) out.push_back(static_cast<std::uint8_t>(b));
    return out;
}

// f written out term by term, independent of the library evaluator
inline Rational naive_value(const Instance& inst, const bqp::BinaryVector& x, const bqp::BinaryVector& y) {
    Rational v = inst.c0();
    for (std::size_t i = 0; i < inst.rows(); ++i) {
        if (x[i]) v += inst.c()[i];
        for (std::size_t j = 0; j < inst.cols(); ++j)
            if (x[i] && y[j]) v += inst.q(i, j);
    }
    for (std::size_t j = 0; j < inst.cols(); ++j)
        if (y[j]) v += inst.d()[j];
    return v;
}

template <class Fn>
void for_all_points(std::size_t m, std::size_t n, Fn&& fn) {
    for (std::uint64_t xm = 0; xm < (1ULL << m); ++xm)
        for (std::uint64_t ym = 0; ym < (1ULL << n); ++ym) fn(bqp::bits_to_vector(xm, m), bqp::bits_to_vector(ym, n));
}

// max over all 2^(m+n) points
inline Rational brute_force(const Instance& inst) {
    const std::size_t m = inst.rows(), n = inst.cols();
    bool first = true;
    Rational best;
    for (std::uint64_t xm = 0; xm < (1ULL << m); ++xm)
        for (std::uint64_t ym = 0; ym < (1ULL << n); ++ym) {
            Rational v = naive_value(inst, bqp::bits_to_vector(xm, m), bqp::bits_to_vector(ym, n));
            if (first || v > best) best = v, first = false;
        }
    return best;
}

// random dimensions in [lo, hi]
inline std::size_t dim(bqp::SplitMix64& rng, std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

inline Instance random_instance(bqp::SplitMix64& rng, std::size_t m, std::size_t n, std::int64_t r = 5) {
    Matrix q(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = Rational(rng.uniform(-r, r), rng.uniform(1, 3));
    std::vector<Rational> c(m), d(n);
    for (auto& v : c) v = Rational(rng.uniform(-r, r), rng.uniform(1, 2));
    for (auto& v : d) v = Rational(rng.uniform(-r, r), rng.uniform(1, 2));
    for (auto& v : c) v.canonicalize();
    for (auto& v : d) v.canonicalize();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j).canonicalize();
    return Instance(std::move(q), std::move(c), std::move(d), Rational(rng.uniform(-r, r)));
}

}  // namespace testing
