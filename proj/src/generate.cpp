#include "bqp/generate.hpp"

#include <algorithm>
#include <stdexcept>

#include "bqp/analysis.hpp"

namespace bqp {

namespace {

std::size_t parse_suffix(std::string_view kind, std::string_view prefix) {
    std::string_view digits = kind.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw std::invalid_argument("bad generator kind '" + std::string(kind) + "'");
    return std::stoul(std::string(digits));
}

Rational draw(SplitMix64& rng, std::int64_t lo, std::int64_t hi) { return Rational(rng.uniform(lo, hi)); }

std::vector<Rational> draw_vector(SplitMix64& rng, std::size_t count, std::int64_t lo, std::int64_t hi) {
    std::vector<Rational> out(count);
    for (auto& v : out) v = draw(rng, lo, hi);
    return out;
}

// Nonzero somewhere: redraw until the vector is not all zero.
std::vector<Rational> draw_nonzero_vector(SplitMix64& rng, std::size_t count, std::int64_t bound) {
    while (true) {
        auto v = draw_vector(rng, count, -bound, bound);
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; })) return v;
    }
}

}  // namespace

Instance generate_instance(std::string_view kind, std::size_t m, std::size_t n, std::uint64_t seed,
                           const GeneratorParams& params) {
    if (m == 0 || n == 0) throw std::invalid_argument("generator sizes must be >= 1");
    const std::int64_t r = std::max<std::int64_t>(1, params.max_abs);
    SplitMix64 rng(seed);
    Matrix q(m, n);

    if (kind == "general") {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) q(i, j) = draw(rng, -r, r);
    } else if (kind == "nonnegative") {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) q(i, j) = draw(rng, 0, r);
    } else if (kind == "additive") {
        auto a = draw_vector(rng, m, -r, r);
        auto b = draw_vector(rng, n, -r, r);
        q = AdditiveDecomposition{a, b}.matrix();
    } else if (kind.starts_with("sparse-negative")) {
        const std::size_t k = parse_suffix(kind, "sparse-negative");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) q(i, j) = draw(rng, 0, r);
        const std::size_t count = std::min<std::size_t>(k, m * n);
        for (std::size_t t = 0; t < count; ++t) {
            auto i = static_cast<std::size_t>(rng.next() % m);
            auto j = static_cast<std::size_t>(rng.next() % n);
            q(i, j) = draw(rng, -r, -1);
        }
    } else if (kind.starts_with("rank")) {
        const std::size_t p = parse_suffix(kind, "rank");
        const std::size_t target = std::min({p, m, n});
        while (true) {
            Matrix a(m, p), b(p, n);
            if (p == 1) {
                // a nonzero column times a nonzero row has rank exactly one
                auto col = draw_nonzero_vector(rng, m, r);
                auto row = draw_nonzero_vector(rng, n, r);
                for (std::size_t i = 0; i < m; ++i) a(i, 0) = col[i];
                for (std::size_t j = 0; j < n; ++j) b(0, j) = row[j];
            } else {
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t k = 0; k < p; ++k) a(i, k) = draw(rng, -r, r);
                for (std::size_t k = 0; k < p; ++k)
                    for (std::size_t j = 0; j < n; ++j) b(k, j) = draw(rng, -r, r);
            }
            q = a * b;
            if (p <= 1 || rank_factorize(q).rank == target) break;
        }
    } else {
        throw std::invalid_argument("unknown generator kind '" + std::string(kind) + "'");
    }

    std::vector<Rational> c(m), d(n);
    Rational c0 = 0;
    if (params.linear_terms) {
        c = draw_vector(rng, m, -r, r);
        d = draw_vector(rng, n, -r, r);
        c0 = draw(rng, -r, r);
    }
    return Instance(std::move(q), std::move(c), std::move(d), std::move(c0));
}

}  // namespace bqp
