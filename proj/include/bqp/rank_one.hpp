#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bqp/instance.hpp"

namespace bqp {

/// maximize (a x)(b y) + c x + d y + c0, i.e. Q = a^T b.
struct RankOneForm {
    std::vector<Rational> a;
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<Rational> d;
    Rational c0;

    std::size_t rows() const { return a.size(); }
    std::size_t cols() const { return b.size(); }

    /// Smallest and largest value of a x over the unit box.
    Rational lambda_min() const;
    Rational lambda_max() const;

    Instance to_instance() const;
};

/// Extracts (a, b) from the rank factorization. Returns nullopt when
/// rank(Q) > 1; rank 0 yields a = 0, b = 0.
std::optional<RankOneForm> rank_one_form(const Instance& inst);

/// Ordered breakpoints of a piecewise-linear parametric optimum together
/// with the flips that move the tracked 0/1 solution between them.
///
/// For the knapsack side (h1): values[0] is the lower end, groups[k] turns
/// solution k into solution k+1, heights[k] = c x^k.
/// For the unconstrained side (h2): `initial` is y^0 at the lower end,
/// groups[l] is flipped at values[l], and (intercepts[l], slopes[l]) hold
/// (D, B) after that flip; heights[l] = D + values[l] * B.
struct BreakpointTrack {
    std::vector<Rational> values;
    std::vector<std::vector<std::size_t>> groups;
    std::vector<Rational> heights;
    BinaryVector initial;

    // unconstrained side only
    Rational initial_intercept;
    Rational initial_slope;
    std::vector<Rational> intercepts;
    std::vector<Rational> slopes;

    std::size_t size() const { return values.size(); }

    /// Solution after applying the first `steps` flip groups to `initial`.
    BinaryVector replay(std::size_t steps) const;
};

/// Breakpoints of h1(lambda) = max { c x : a x = lambda, x in [0,1]^m }.
/// Indices with a_i != 0 are grouped by equal ratio c_i / a_i in
/// descending order (exact cross-multiplication); a_i == 0 indices stay at
/// [c_i > 0]. At most m + 1 breakpoints.
BreakpointTrack pkp_breakpoints(const RankOneForm& form);

/// Breakpoints of h2(mu) = max { d y + mu b y : y in [0,1]^n } above the
/// lower end lambda_min: distinct values -d_j / b_j ascending, each with the
/// group of indices sharing it.
BreakpointTrack ulp_breakpoints(const RankOneForm& form);

/// h2 at the lower end lambda_min, i.e. D^0 + lambda_min * B^0.
Rational ulp_initial_height(const RankOneForm& form, const BreakpointTrack& ulp);

struct RankOneStats {
    std::size_t h1_breakpoints = 0;
    std::size_t h2_breakpoints = 0;
};

/// Merged ascending sweep of both tracks; each h1 breakpoint is scored with
/// the current h2 state (mu flips at equal value are applied first).
/// O((m + n) log(m + n)).
Solution solve_rank_one(const RankOneForm& form, RankOneStats* stats = nullptr);

/// maximize (a0 + a x)(b0 + b y) + c x + d y with c == 0 or d == 0, in
/// linear time: only the two extreme values of the zero-linear side matter.
/// Throws PreconditionError when both c and d are nonzero.
Solution solve_rank_one_zero_linear(const Rational& a0, const std::vector<Rational>& a, const Rational& b0,
                                    const std::vector<Rational>& b, const std::vector<Rational>& c,
                                    const std::vector<Rational>& d);

/// Objective of the zero-linear form, used for reporting and tests.
Rational evaluate_zero_linear(const Rational& a0, const std::vector<Rational>& a, const Rational& b0,
                              const std::vector<Rational>& b, const std::vector<Rational>& c,
                              const std::vector<Rational>& d, std::span<const std::uint8_t> x,
                              std::span<const std::uint8_t> y);

}  // namespace bqp
