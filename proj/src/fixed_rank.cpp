#include "bqp/fixed_rank.hpp"

#include <algorithm>
#include <string>

#include "bqp/analysis.hpp"
#include "bqp/error.hpp"

namespace bqp {

int ReducedCostSign::sign() const {
    if (int s = sgn(base); s != 0) return s;
    for (const auto& [index, coeff] : perturbation)
        if (int s = sgn(coeff); s != 0) return s;
    return 0;
}

std::optional<Matrix> invert(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionError("invert needs a square matrix");
    Matrix work = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t r = col;
        while (r < n && sgn(work(r, col)) == 0) ++r;
        if (r == n) return std::nullopt;
        if (r != col) {
            for (std::size_t j = 0; j < n; ++j) {
                swap(work(r, j), work(col, j));
                swap(inv(r, j), inv(col, j));
            }
        }
        const Rational scale = 1 / work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(work(i, col)) == 0) continue;
            const Rational factor = work(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= factor * work(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// The rank-th p-subset of {0..m-1} in lexicographic order.
std::vector<std::size_t> unrank_subset(std::uint64_t rank, std::size_t m, std::size_t p) {
    std::vector<std::size_t> out;
    out.reserve(p);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < p; ++slot) {
        for (std::size_t v = next;; ++v) {
            std::uint64_t below = binomial(m - v - 1, p - slot - 1);
            if (rank < below) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            rank -= below;
        }
    }
    return out;
}

// Basis built from the given rows of A (each row is one constraint column).
std::optional<BasisStructure> make_basis(const Matrix& a, const std::vector<Rational>& c,
                                         std::vector<std::size_t> basic) {
    const std::size_t m = a.rows();
    const std::size_t p = a.cols();
    Matrix basis(p, p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t r = 0; r < p; ++r) basis(r, k) = a(basic[k], r);
    auto inverse = invert(basis);
    if (!inverse) return std::nullopt;

    BasisStructure bs;
    bs.inverse = std::move(*inverse);
    std::vector<char> is_basic(m);
    for (std::size_t i : basic) is_basic[i] = 1;

    std::vector<Rational> w(p);
    for (std::size_t j = 0; j < m; ++j) {
        if (is_basic[j]) continue;
        // w = B^-1 A_j; reduced cost = c_B w - c_j, perturbation picks up
        // w_k at index basic[k] and -1 at j
        ReducedCostSign rc;
        rc.base = -c[j];
        for (std::size_t k = 0; k < p; ++k) {
            w[k] = 0;
            for (std::size_t r = 0; r < p; ++r) w[k] += bs.inverse(k, r) * a(j, r);
            rc.base += c[basic[k]] * w[k];
            if (sgn(w[k]) != 0) rc.perturbation.emplace_back(basic[k], w[k]);
        }
        rc.perturbation.emplace_back(j, Rational(-1));
        std::sort(rc.perturbation.begin(), rc.perturbation.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        if (rc.sign() > 0) bs.lower.push_back(j);
        else bs.upper.push_back(j);
    }
    bs.basic = std::move(basic);
    return bs;
}

void require_full_column_rank(const Matrix& a) {
    if (rank_factorize(a).rank != a.cols())
        throw PreconditionError("constraint factor does not have full column rank");
}

struct Best {
    Solution solution;
    std::size_t bases = 0;
    std::size_t candidates = 0;
};

class CandidateScorer {
 public:
    CandidateScorer(const Instance& inst, const Matrix& a, const Matrix& b)
        : inst_(inst), a_(a), b_(b), lambda_(a.cols()), scores_(inst.cols()) {}

    void score(const BinaryVector& x, Best& best) {
        const std::size_t p = a_.cols();
        Rational value = inst_.c0();
        for (std::size_t k = 0; k < p; ++k) lambda_[k] = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!x[i]) continue;
            value += inst_.c()[i];
            for (std::size_t k = 0; k < p; ++k) lambda_[k] += a_(i, k);
        }
        BinaryVector y(inst_.cols());
        for (std::size_t j = 0; j < inst_.cols(); ++j) {
            Rational& s = scores_[j];
            s = inst_.d()[j];
            for (std::size_t k = 0; k < p; ++k) s += b_(k, j) * lambda_[k];
            if (sgn(s) > 0) {
                y[j] = 1;
                value += s;
            }
        }
        ++best.candidates;
        if (improves(value, x, y, best.solution)) best.solution = {x, std::move(y), std::move(value)};
    }

 private:
    const Instance& inst_;
    const Matrix& a_;
    const Matrix& b_;
    std::vector<Rational> lambda_;
    std::vector<Rational> scores_;
};

void emit_filtered(const BasisStructure& bs, std::size_t m, CandidateScorer& scorer, Best& best) {
    for (auto& x : candidates_from_basis(bs, m)) scorer.score(x, best);
}

// Superset mode: every split of the nonbasic indices between 0 and 1.
void emit_unfiltered(const BasisStructure& bs, std::size_t m, CandidateScorer& scorer, Best& best) {
    std::vector<std::size_t> nonbasic = bs.lower;
    nonbasic.insert(nonbasic.end(), bs.upper.begin(), bs.upper.end());
    std::sort(nonbasic.begin(), nonbasic.end());
    const std::uint64_t splits = std::uint64_t{1} << nonbasic.size();
    BasisStructure variant;
    variant.basic = bs.basic;
    for (std::uint64_t s = 0; s < splits; ++s) {
        variant.lower.clear();
        variant.upper.clear();
        for (std::size_t t = 0; t < nonbasic.size(); ++t)
            ((s >> t) & 1u ? variant.upper : variant.lower).push_back(nonbasic[t]);
        emit_filtered(variant, m, scorer, best);
    }
}

void merge(Best& into, const Best& from) {
    into.bases += from.bases;
    into.candidates += from.candidates;
    if (!from.solution.x.empty() && improves(from.solution.value, from.solution.x, from.solution.y, into.solution))
        into.solution = from.solution;
}

}  // namespace

std::vector<BasisStructure> enumerate_dual_feasible_bases(const Matrix& a, const std::vector<Rational>& c) {
    if (c.size() != a.rows()) throw DimensionError("cost vector length does not match constraint columns");
    require_full_column_rank(a);
    const std::size_t m = a.rows();
    const std::size_t p = a.cols();
    std::vector<BasisStructure> out;
    const std::uint64_t total = binomial(m, p);
    for (std::uint64_t r = 0; r < total; ++r)
        if (auto bs = make_basis(a, c, unrank_subset(r, m, p))) out.push_back(std::move(*bs));
    return out;
}

std::vector<BinaryVector> candidates_from_basis(const BasisStructure& bs, std::size_t m) {
    BinaryVector base(m);
    for (std::size_t j : bs.upper) base[j] = 1;
    const std::size_t p = bs.basic.size();
    std::vector<BinaryVector> out;
    out.reserve(std::size_t{1} << p);
    for (std::uint64_t tau = 0; tau < (std::uint64_t{1} << p); ++tau) {
        BinaryVector x = base;
        for (std::size_t k = 0; k < p; ++k) x[bs.basic[k]] = static_cast<std::uint8_t>((tau >> k) & 1u);
        out.push_back(std::move(x));
    }
    return out;
}

FixedRankResult solve_fixed_rank(const Instance& inst, const FixedRankOptions& options) {
    const auto factors = rank_factorize(inst.q());
    const std::size_t p = factors.rank;
    const std::size_t m = inst.rows();
    if (p > options.p_limit)
        throw RefusalError("fixed-rank solver refused: rank " + std::to_string(p) + " exceeds limit " +
                               std::to_string(options.p_limit),
                           options.p_limit, p);
    if (!options.dual_filter && m - p > 20)
        throw RefusalError("superset mode refused: " + std::to_string(m - p) + " nonbasic indices exceed limit 20", 20,
                           m - p);

    const std::uint64_t total = binomial(m, p);
    auto work = [&](std::uint64_t r, CandidateScorer& scorer, Best& best) {
        auto bs = make_basis(factors.a, inst.c(), unrank_subset(r, m, p));
        if (!bs) return;
        ++best.bases;
        if (options.dual_filter) emit_filtered(*bs, m, scorer, best);
        else emit_unfiltered(*bs, m, scorer, best);
    };

    Best best;
    if (options.execution == Execution::serial) {
        CandidateScorer scorer(inst, factors.a, factors.b);
        for (std::uint64_t r = 0; r < total; ++r) work(r, scorer, best);
    } else {
#pragma omp parallel
        {
            CandidateScorer scorer(inst, factors.a, factors.b);
            Best local;
#pragma omp for schedule(dynamic, 16) nowait
            for (long r = 0; r < static_cast<long>(total); ++r) work(static_cast<std::uint64_t>(r), scorer, local);
#pragma omp critical
            merge(best, local);
        }
    }
    return {std::move(best.solution), p, best.bases, best.candidates};
}

}  // namespace bqp
