#include "bqp/rank_one.hpp"

#include <algorithm>
#include <numeric>

#include "bqp/analysis.hpp"
#include "bqp/error.hpp"

namespace bqp {

namespace {

// Ratio num/den with den > 0, compared by cross-multiplication.
struct Ratio {
    Rational num;
    Rational den;
    std::size_t index;
};

int compare(const Ratio& l, const Ratio& r) { return cmp(l.num * r.den, r.num * l.den); }

// Sorts by ratio (descending when `descending`), index ascending among
// ties, and splits into groups of equal ratio.
std::vector<std::vector<std::size_t>> grouped_order(std::vector<Ratio>& ratios, bool descending) {
    std::sort(ratios.begin(), ratios.end(), [descending](const Ratio& l, const Ratio& r) {
        int order = compare(l, r);
        if (order != 0) return descending ? order > 0 : order < 0;
        return l.index < r.index;
    });
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < ratios.size(); ++k) {
        if (k == 0 || compare(ratios[k - 1], ratios[k]) != 0) groups.emplace_back();
        groups.back().push_back(ratios[k].index);
    }
    return groups;
}

void check_form(const RankOneForm& form) {
    if (form.c.size() != form.a.size() || form.d.size() != form.b.size())
        throw DimensionError("rank-one form: c must match a and d must match b");
}

}  // namespace

Rational RankOneForm::lambda_min() const {
    Rational s = 0;
    for (const auto& v : a)
        if (sgn(v) < 0) s += v;
    return s;
}

Rational RankOneForm::lambda_max() const {
    Rational s = 0;
    for (const auto& v : a)
        if (sgn(v) > 0) s += v;
    return s;
}

Instance RankOneForm::to_instance() const {
    Matrix q(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) q(i, j) = a[i] * b[j];
    return Instance(std::move(q), c, d, c0);
}

std::optional<RankOneForm> rank_one_form(const Instance& inst) {
    auto f = rank_factorize(inst.q());
    if (f.rank > 1) return std::nullopt;
    RankOneForm form{std::vector<Rational>(inst.rows()), std::vector<Rational>(inst.cols()), inst.c(), inst.d(),
                     inst.c0()};
    if (f.rank == 1) {
        form.a = f.a.column(0);
        for (std::size_t j = 0; j < inst.cols(); ++j) form.b[j] = f.b(0, j);
    }
    return form;
}

BinaryVector BreakpointTrack::replay(std::size_t steps) const {
    BinaryVector v = initial;
    for (std::size_t k = 0; k < steps && k < groups.size(); ++k)
        for (std::size_t i : groups[k]) v[i] ^= 1u;
    return v;
}

BreakpointTrack pkp_breakpoints(const RankOneForm& form) {
    check_form(form);
    const std::size_t m = form.rows();
    BreakpointTrack track;
    track.initial.resize(m);
    Rational lambda = form.lambda_min();
    Rational height = 0;
    std::vector<Ratio> ratios;
    for (std::size_t i = 0; i < m; ++i) {
        const int s = sgn(form.a[i]);
        if (s < 0 || (s == 0 && sgn(form.c[i]) > 0)) {
            track.initial[i] = 1;
            height += form.c[i];
        }
        if (s != 0) ratios.push_back({s > 0 ? form.c[i] : Rational(-form.c[i]), abs(form.a[i]), i});
    }
    track.groups = grouped_order(ratios, true);
    track.values.push_back(lambda);
    track.heights.push_back(height);
    for (const auto& group : track.groups) {
        for (std::size_t i : group) {
            lambda += abs(form.a[i]);
            // a_i > 0 enters at 1 (was 0); a_i < 0 drops to 0 (was 1)
            if (sgn(form.a[i]) > 0) height += form.c[i];
            else height -= form.c[i];
        }
        track.values.push_back(lambda);
        track.heights.push_back(height);
    }
    return track;
}

BreakpointTrack ulp_breakpoints(const RankOneForm& form) {
    check_form(form);
    const std::size_t n = form.cols();
    const Rational low = form.lambda_min();
    BreakpointTrack track;
    track.initial.resize(n);
    Rational intercept = 0, slope = 0;
    std::vector<Ratio> ratios;
    for (std::size_t j = 0; j < n; ++j) {
        const Rational score = form.d[j] + low * form.b[j];
        const int bs = sgn(form.b[j]);
        const int ss = sgn(score);
        // y^0 is the optimal state just above the lower end; a tie at the
        // lower end follows the sign of b_j
        if (ss > 0 || (ss == 0 && bs >= 0)) {
            track.initial[j] = 1;
            intercept += form.d[j];
            slope += form.b[j];
        }
        if (bs == 0) continue;
        Ratio r{bs > 0 ? Rational(-form.d[j]) : form.d[j], abs(form.b[j]), j};
        if (cmp(r.num, low * r.den) > 0) ratios.push_back(std::move(r));
    }
    track.initial_intercept = intercept;
    track.initial_slope = slope;
    track.groups = grouped_order(ratios, false);

    BinaryVector y = track.initial;
    std::size_t pos = 0;
    for (const auto& group : track.groups) {
        const Ratio& r = ratios[pos];
        pos += group.size();
        Rational mu = r.num / r.den;
        for (std::size_t j : group) {
            if (y[j]) {
                intercept -= form.d[j];
                slope -= form.b[j];
            } else {
                intercept += form.d[j];
                slope += form.b[j];
            }
            y[j] ^= 1u;
        }
        track.heights.push_back(intercept + mu * slope);
        track.values.push_back(std::move(mu));
        track.intercepts.push_back(intercept);
        track.slopes.push_back(slope);
    }
    return track;
}

Rational ulp_initial_height(const RankOneForm& form, const BreakpointTrack& ulp) {
    return ulp.initial_intercept + form.lambda_min() * ulp.initial_slope;
}

Solution solve_rank_one(const RankOneForm& form, RankOneStats* stats) {
    const BreakpointTrack h1 = pkp_breakpoints(form);
    const BreakpointTrack h2 = ulp_breakpoints(form);
    if (stats) *stats = {h1.size(), h2.size()};

    Rational intercept = h2.initial_intercept;
    Rational slope = h2.initial_slope;
    std::size_t consumed = 0;

    bool found = false;
    Rational best;
    std::size_t best_k = 0, best_consumed = 0;
    for (std::size_t k = 0; k < h1.size(); ++k) {
        const Rational& lambda = h1.values[k];
        while (consumed < h2.size() && cmp(h2.values[consumed], lambda) <= 0) {
            intercept = h2.intercepts[consumed];
            slope = h2.slopes[consumed];
            ++consumed;
        }
        Rational value = h1.heights[k] + intercept + lambda * slope + form.c0;
        if (!found || cmp(value, best) > 0) {
            found = true;
            best = std::move(value);
            best_k = k;
            best_consumed = consumed;
        }
    }
    return {h1.replay(best_k), h2.replay(best_consumed), best};
}

Rational evaluate_zero_linear(const Rational& a0, const std::vector<Rational>& a, const Rational& b0,
                              const std::vector<Rational>& b, const std::vector<Rational>& c,
                              const std::vector<Rational>& d, std::span<const std::uint8_t> x,
                              std::span<const std::uint8_t> y) {
    if (x.size() != a.size() || y.size() != b.size()) throw DimensionError("solution length mismatch");
    Rational left = a0, right = b0, linear = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!x[i]) continue;
        left += a[i];
        if (!c.empty()) linear += c[i];
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (!y[j]) continue;
        right += b[j];
        if (!d.empty()) linear += d[j];
    }
    return left * right + linear;
}

namespace {

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// Best free side for a fixed value `level` of the other factor:
// maximize (f0 + f v) * level + g v over binary v.
BinaryVector best_response(const std::vector<Rational>& f, const std::vector<Rational>& g, const Rational& level) {
    BinaryVector v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Rational gain = f[i] * level;
        if (!g.empty()) gain += g[i];
        v[i] = sgn(gain) > 0 ? 1 : 0;
    }
    return v;
}

BinaryVector sign_pattern(const std::vector<Rational>& v, int wanted) {
    BinaryVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = sgn(v[i]) == wanted ? 1 : 0;
    return out;
}

Rational level_of(const Rational& base, const std::vector<Rational>& v, const BinaryVector& pick) {
    Rational s = base;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (pick[i]) s += v[i];
    return s;
}

}  // namespace

Solution solve_rank_one_zero_linear(const Rational& a0, const std::vector<Rational>& a, const Rational& b0,
                                    const std::vector<Rational>& b, const std::vector<Rational>& c,
                                    const std::vector<Rational>& d) {
    if (c.size() != a.size() || d.size() != b.size()) throw DimensionError("zero-linear form: length mismatch");
    const bool d_zero = all_zero(d);
    const bool c_zero = all_zero(c);
    if (!d_zero && !c_zero)
        throw PreconditionError("zero-linear solver needs c = 0 or d = 0; use solve_rank_one for the general case");

    Solution best;
    auto consider = [&](BinaryVector x, BinaryVector y) {
        Rational value = evaluate_zero_linear(a0, a, b0, b, c, d, x, y);
        if (best.x.empty() || cmp(value, best.value) > 0) best = {std::move(x), std::move(y), std::move(value)};
    };
    if (d_zero) {
        // the y side only moves lambda = b0 + b y between its two extremes
        for (int wanted : {1, -1}) {
            BinaryVector y = sign_pattern(b, wanted);
            consider(best_response(a, c, level_of(b0, b, y)), y);
        }
    } else {
        for (int wanted : {1, -1}) {
            BinaryVector x = sign_pattern(a, wanted);
            consider(x, best_response(b, d, level_of(a0, a, x)));
        }
    }
    return best;
}

}  // namespace bqp
