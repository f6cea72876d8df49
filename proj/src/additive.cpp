#include "bqp/additive.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "bqp/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bqp {

std::vector<std::size_t> order_by_key(const std::vector<Rational>& scale, const std::vector<Rational>& offset,
                                      std::size_t weight) {
    const std::size_t count = scale.size();
    std::vector<Rational> keys(count);
    for (std::size_t i = 0; i < count; ++i) keys[i] = scale[i] * static_cast<unsigned long>(weight) + offset[i];
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        int c = cmp(keys[l], keys[r]);
        return c != 0 ? c > 0 : l < r;
    });
    return order;
}

namespace {

// Orders by weight * scale + offset for weight = 0..max_weight, row w at
// out[w * count]. Consecutive orders differ only where two key lines
// cross, and each pair crosses at most once, so an insertion sort started
// from the previous order does O(count^2) swaps in total. Parallel mode
// splits the weight range into chunks, each seeded by a full sort.
void orders_for_weights(const std::vector<Rational>& scale, const std::vector<Rational>& offset,
                        std::size_t max_weight, std::vector<std::uint32_t>& out, bool parallel) {
    const std::size_t count = scale.size();
    out.assign((max_weight + 1) * count, 0);
    if (count == 0) return;
    long chunks = 1;
#ifdef _OPENMP
    if (parallel) chunks = std::max(1, omp_get_max_threads());
#endif
    const std::size_t per = (max_weight + 1 + static_cast<std::size_t>(chunks) - 1) / static_cast<std::size_t>(chunks);
#pragma omp parallel for schedule(static) if (parallel)
    for (long ch = 0; ch < chunks; ++ch) {
        const std::size_t w_begin = static_cast<std::size_t>(ch) * per;
        const std::size_t w_end = std::min(max_weight + 1, w_begin + per);
        if (w_begin >= w_end) continue;
        auto order = order_by_key(scale, offset, w_begin);
        std::vector<Rational> keys(count);
        for (std::size_t i = 0; i < count; ++i) keys[i] = scale[i] * static_cast<unsigned long>(w_begin) + offset[i];
        auto before = [&](std::size_t l, std::size_t r) {
            int c = cmp(keys[l], keys[r]);
            return c != 0 ? c > 0 : l < r;
        };
        for (std::size_t w = w_begin; w < w_end; ++w) {
            if (w > w_begin) {
                for (std::size_t i = 0; i < count; ++i) keys[i] += scale[i];
                for (std::size_t t = 1; t < count; ++t) {
                    const std::size_t v = order[t];
                    std::size_t s = t;
                    for (; s > 0 && before(v, order[s - 1]); --s) order[s] = order[s - 1];
                    order[s] = v;
                }
            }
            std::copy(order.begin(), order.end(), out.begin() + static_cast<std::ptrdiff_t>(w * count));
        }
    }
}

}  // namespace

AdditiveResult solve_additive(const std::vector<Rational>& a, const std::vector<Rational>& b,
                              const std::vector<Rational>& c, const std::vector<Rational>& d, const Rational& c0,
                              Execution execution) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    if (c.size() != m || d.size() != n) throw DimensionError("additive solver: length mismatch");
    const bool parallel = execution == Execution::parallel;

    // y-order for each L = |x| and x-order for each K = |y|
    std::vector<std::uint32_t> y_order, x_order;
    orders_for_weights(b, d, m, y_order, parallel);
    orders_for_weights(a, c, n, x_order, parallel);

    // f2[L]: best y-side value for the current K, advanced one K at a time
    std::vector<Rational> f2(m + 1);
    bool found = false;
    Rational best, prefix, value;
    std::size_t best_k = 0, best_l = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const std::uint32_t* order = x_order.data() + k * m;
        prefix = 0;
        for (std::size_t l = 0; l <= m; ++l) {
            if (l > 0) {
                const std::size_t i = order[l - 1];
                prefix += a[i] * static_cast<unsigned long>(k);
                prefix += c[i];
            }
            value = prefix + f2[l];
            if (!found || cmp(value, best) > 0) {
                found = true;
                best = value;
                best_k = k;
                best_l = l;
            }
        }
        if (k == n) break;
        for (std::size_t l = 0; l <= m; ++l) {
            const std::size_t j = y_order[l * n + k];
            f2[l] += b[j] * static_cast<unsigned long>(l);
            f2[l] += d[j];
        }
    }

    AdditiveResult result;
    result.ones_in_y = best_k;
    result.ones_in_x = best_l;
    result.solution.x.assign(m, 0);
    result.solution.y.assign(n, 0);
    for (std::size_t t = 0; t < best_l; ++t) result.solution.x[x_order[best_k * m + t]] = 1;
    for (std::size_t t = 0; t < best_k; ++t) result.solution.y[y_order[best_l * n + t]] = 1;
    result.solution.value = best + c0;
    return result;
}

Solution solve_additive(const Instance& inst, const AdditiveDecomposition& dec, Execution execution) {
    if (dec.a.size() != inst.rows() || dec.b.size() != inst.cols())
        throw PreconditionError("additive decomposition has the wrong shape");
    for (std::size_t i = 0; i < inst.rows(); ++i)
        for (std::size_t j = 0; j < inst.cols(); ++j)
            if (dec.a[i] + dec.b[j] != inst.q(i, j))
                throw PreconditionError("additive decomposition does not reproduce q(" + std::to_string(i + 1) + ", " +
                                        std::to_string(j + 1) + ")");
    return solve_additive(dec.a, dec.b, inst.c(), inst.d(), inst.c0(), execution).solution;
}

}  // namespace bqp
