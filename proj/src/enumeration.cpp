#include "bqp/enumeration.hpp"

#include <bit>
#include <string>
#include <vector>

#include "bqp/error.hpp"

namespace bqp {

namespace {

// Lexicographic order on the vectors (bit 0 first) encoded by two masks.
bool lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (!diff) return false;
    return ((a >> std::countr_zero(diff)) & 1u) == 0;
}

struct ChunkBest {
    bool found = false;
    Rational value;
    std::uint64_t x = 0;
};

void offer(ChunkBest& best, const Rational& value, std::uint64_t x) {
    if (!best.found) {
        best = {true, value, x};
        return;
    }
    int order = cmp(value, best.value);
    if (order > 0 || (order == 0 && lex_less(x, best.x))) {
        best.value = value;
        best.x = x;
    }
}

// Scans every x whose top `m - low_bits` bits equal `prefix`.
ChunkBest scan_chunk(const Instance& inst, std::size_t low_bits, std::uint64_t prefix) {
    const std::size_t m = inst.rows();
    const std::size_t n = inst.cols();
    std::uint64_t x = prefix << low_bits;

    std::vector<Rational> scores = inst.d();
    Rational linear = inst.c0();
    for (std::size_t i = 0; i < m; ++i) {
        if (!((x >> i) & 1u)) continue;
        linear += inst.c()[i];
        auto row = inst.q().row(i);
        for (std::size_t j = 0; j < n; ++j) scores[j] += row[j];
    }

    ChunkBest best;
    Rational value;
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t k = 0;; ++k) {
        value = linear;
        for (const auto& s : scores)
            if (sgn(s) > 0) value += s;
        offer(best, value, x);
        if (k + 1 == steps) break;

        const unsigned flip = static_cast<unsigned>(std::countr_zero(k + 1));
        x ^= std::uint64_t{1} << flip;
        auto row = inst.q().row(flip);
        if ((x >> flip) & 1u) {
            linear += inst.c()[flip];
            for (std::size_t j = 0; j < n; ++j) scores[j] += row[j];
        } else {
            linear -= inst.c()[flip];
            for (std::size_t j = 0; j < n; ++j) scores[j] -= row[j];
        }
    }
    return best;
}

}  // namespace

Solution best_y_for_x(const Instance& inst, std::span<const std::uint8_t> x) {
    auto scores = column_scores(inst, x);
    Solution s;
    s.x.assign(x.begin(), x.end());
    s.y.resize(inst.cols());
    for (std::size_t j = 0; j < inst.cols(); ++j) s.y[j] = sgn(scores[j]) > 0 ? 1 : 0;
    s.value = evaluate_objective(inst, s.x, s.y);
    return s;
}

Solution solve_enumeration(const Instance& inst, const EnumerationOptions& options) {
    const std::size_t m = inst.rows();
    const std::size_t limit = std::min<std::size_t>(options.m_limit, 62);
    if (m > limit)
        throw RefusalError("enumeration refused: m = " + std::to_string(m) + " exceeds limit " + std::to_string(limit),
                           limit, m);

    ChunkBest best;
    if (options.execution == Execution::serial || m < 4) {
        best = scan_chunk(inst, m, 0);
    } else {
        const std::size_t prefix_bits = std::min<std::size_t>(m / 2, 8);
        const std::size_t low_bits = m - prefix_bits;
        const long chunks = 1L << prefix_bits;
        std::vector<ChunkBest> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
        for (long chunk = 0; chunk < chunks; ++chunk)
            partial[static_cast<std::size_t>(chunk)] = scan_chunk(inst, low_bits, static_cast<std::uint64_t>(chunk));
        for (const auto& p : partial) offer(best, p.value, p.x);
    }
    return best_y_for_x(inst, bits_to_vector(best.x, m));
}

Solution solve_oracle(const Instance& inst, std::size_t limit) {
    const std::size_t m = inst.rows();
    const std::size_t n = inst.cols();
    if (m + n > limit || m + n > 62)
        throw RefusalError("oracle refused: m + n = " + std::to_string(m + n) + " exceeds limit " +
                               std::to_string(limit),
                           limit, m + n);

    bool found = false;
    Rational best_value;
    std::uint64_t best_x = 0, best_y = 0;
    std::vector<Rational> scores(n);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        Rational base = inst.c0();
        for (std::size_t j = 0; j < n; ++j) scores[j] = inst.d()[j];
        for (std::size_t i = 0; i < m; ++i) {
            if (!((x >> i) & 1u)) continue;
            base += inst.c()[i];
            for (std::size_t j = 0; j < n; ++j) scores[j] += inst.q(i, j);
        }
        // every y, visited in Gray-code order
        std::uint64_t y = 0;
        Rational value = base;
        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t k = 0;; ++k) {
            int order = found ? cmp(value, best_value) : 1;
            if (order > 0 || (order == 0 && (lex_less(x, best_x) || (x == best_x && lex_less(y, best_y))))) {
                found = true;
                best_value = value;
                best_x = x;
                best_y = y;
            }
            if (k + 1 == count) break;
            const unsigned flip = static_cast<unsigned>(std::countr_zero(k + 1));
            y ^= std::uint64_t{1} << flip;
            if ((y >> flip) & 1u) value += scores[flip];
            else value -= scores[flip];
        }
    }
    Solution s{bits_to_vector(best_x, m), bits_to_vector(best_y, n), best_value};
    return s;
}

}  // namespace bqp
