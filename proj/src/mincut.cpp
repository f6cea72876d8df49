#include "bqp/mincut.hpp"

#include <queue>
#include <string>

#include "bqp/error.hpp"

namespace bqp {

namespace {

class Dinic {
 public:
    explicit Dinic(const FlowNetwork& net) : graph_(net.nodes), level_(net.nodes), next_(net.nodes) {
        for (const auto& arc : net.arcs) {
            if (sgn(arc.capacity) < 0) throw PreconditionError("negative arc capacity");
            if (arc.from >= net.nodes || arc.to >= net.nodes) throw DimensionError("arc endpoint out of range");
            graph_[arc.from].push_back({arc.to, arc.capacity, graph_[arc.to].size()});
            graph_[arc.to].push_back({arc.from, Rational(0), graph_[arc.from].size() - 1});
        }
    }

    Rational run(std::size_t s, std::size_t t) {
        Rational total = 0;
        while (build_levels(s, t)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (true) {
                Rational pushed = push(s, t, nullptr);
                if (sgn(pushed) == 0) break;
                total += pushed;
            }
        }
        return total;
    }

    std::vector<bool> reachable(std::size_t s) const {
        std::vector<bool> seen(graph_.size());
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (const auto& e : graph_[u]) {
                if (sgn(e.residual) > 0 && !seen[e.to]) {
                    seen[e.to] = true;
                    stack.push_back(e.to);
                }
            }
        }
        return seen;
    }

 private:
    struct Edge {
        std::size_t to;
        Rational residual;
        std::size_t reverse;
    };

    bool build_levels(std::size_t s, std::size_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::size_t> queue;
        level_[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop();
            for (const auto& e : graph_[u]) {
                if (level_[e.to] < 0 && sgn(e.residual) > 0) {
                    level_[e.to] = level_[u] + 1;
                    queue.push(e.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    // Pushes one augmenting path's worth of flow (bounded by `limit`, null
    // meaning unbounded) along the level graph.
    Rational push(std::size_t u, std::size_t t, const Rational* limit) {
        if (u == t) return limit ? *limit : Rational(0);
        for (auto& i = next_[u]; i < graph_[u].size(); ++i) {
            Edge& e = graph_[u][i];
            if (sgn(e.residual) <= 0 || level_[e.to] != level_[u] + 1) continue;
            const Rational& bound = (limit && cmp(*limit, e.residual) < 0) ? *limit : e.residual;
            Rational got = push(e.to, t, &bound);
            if (sgn(got) > 0) {
                e.residual -= got;
                graph_[e.to][e.reverse].residual += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<Edge>> graph_;
    std::vector<long> level_;
    std::vector<std::size_t> next_;
};

struct Terms {
    const Matrix& q;
    const std::vector<Rational>& c;
    const std::vector<Rational>& d;
    const Rational& c0;
};

CutNetwork network_from_terms(const Terms& t) {
    const std::size_t m = t.q.rows();
    const std::size_t n = t.q.cols();
    CutNetwork out;
    FlowNetwork& net = out.network;
    net.nodes = 2 + m + n;
    net.source = 0;
    net.sink = 1;
    out.offset = t.c0;
    for (std::size_t i = 0; i < m; ++i) {
        Rational row_total = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = t.q(i, j);
            if (sgn(q) < 0)
                throw PreconditionError("min-cut solver needs a nonnegative matrix; q(" + std::to_string(i + 1) + ", " +
                                        std::to_string(j + 1) + ") = " + to_string(q));
            if (sgn(q) == 0) continue;
            row_total += q;
            net.arcs.push_back({x_node(i), y_node(m, j), q});
        }
        out.offset += row_total;
        Rational source_cap = row_total;
        if (sgn(t.c[i]) > 0) {
            source_cap += t.c[i];
            out.offset += t.c[i];
        } else if (sgn(t.c[i]) < 0) {
            net.arcs.push_back({x_node(i), net.sink, -t.c[i]});
        }
        if (sgn(source_cap) > 0) net.arcs.push_back({net.source, x_node(i), std::move(source_cap)});
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(t.d[j]) > 0) {
            net.arcs.push_back({net.source, y_node(m, j), t.d[j]});
            out.offset += t.d[j];
        } else if (sgn(t.d[j]) < 0) {
            net.arcs.push_back({y_node(m, j), net.sink, -t.d[j]});
        }
    }
    return out;
}

Solution solve_terms(const Terms& t) {
    const std::size_t m = t.q.rows();
    const std::size_t n = t.q.cols();
    Solution s;
    s.x.assign(m, 0);
    s.y.assign(n, 0);
    auto cut = network_from_terms(t);
    auto flow = max_flow(cut.network);
    for (std::size_t i = 0; i < m; ++i) s.x[i] = flow.source_side[x_node(i)] ? 1 : 0;
    for (std::size_t j = 0; j < n; ++j) s.y[j] = flow.source_side[y_node(m, j)] ? 1 : 0;
    s.value = cut.offset - flow.value;
    return s;
}

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
    if (net.source == net.sink) throw PreconditionError("source and sink coincide");
    if (net.source >= net.nodes || net.sink >= net.nodes) throw DimensionError("terminal out of range");
    Dinic dinic(net);
    FlowResult result;
    result.value = dinic.run(net.source, net.sink);
    result.source_side = dinic.reachable(net.source);
    return result;
}

Rational cut_capacity(const FlowNetwork& net, const std::vector<bool>& source_side) {
    Rational total = 0;
    for (const auto& arc : net.arcs)
        if (source_side[arc.from] && !source_side[arc.to]) total += arc.capacity;
    return total;
}

CutNetwork build_cut_network(const Instance& inst) {
    return network_from_terms({inst.q(), inst.c(), inst.d(), inst.c0()});
}

Solution solve_nonnegative(const Instance& inst) {
    return solve_terms({inst.q(), inst.c(), inst.d(), inst.c0()});
}

ReducedInstance fold_fixings(const Instance& inst, const std::vector<std::int8_t>& fixed_x,
                             const std::vector<std::int8_t>& fixed_y) {
    const std::size_t m = inst.rows();
    const std::size_t n = inst.cols();
    if (fixed_x.size() != m || fixed_y.size() != n) throw DimensionError("fixing vector length mismatch");
    ReducedInstance r;
    r.fixed_x = fixed_x;
    r.fixed_y = fixed_y;
    for (std::size_t i = 0; i < m; ++i)
        if (fixed_x[i] < 0) r.free_rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
        if (fixed_y[j] < 0) r.free_cols.push_back(j);

    r.constant = inst.c0();
    for (std::size_t i = 0; i < m; ++i) {
        if (fixed_x[i] != 1) continue;
        r.constant += inst.c()[i];
        for (std::size_t j = 0; j < n; ++j)
            if (fixed_y[j] == 1) r.constant += inst.q(i, j);
    }
    for (std::size_t j = 0; j < n; ++j)
        if (fixed_y[j] == 1) r.constant += inst.d()[j];

    r.q = Matrix(r.free_rows.size(), r.free_cols.size());
    r.c.resize(r.free_rows.size());
    r.d.resize(r.free_cols.size());
    for (std::size_t a = 0; a < r.free_rows.size(); ++a) {
        const std::size_t i = r.free_rows[a];
        r.c[a] = inst.c()[i];
        for (std::size_t j = 0; j < n; ++j)
            if (fixed_y[j] == 1) r.c[a] += inst.q(i, j);
        for (std::size_t b = 0; b < r.free_cols.size(); ++b) r.q(a, b) = inst.q(i, r.free_cols[b]);
    }
    for (std::size_t b = 0; b < r.free_cols.size(); ++b) {
        const std::size_t j = r.free_cols[b];
        r.d[b] = inst.d()[j];
        for (std::size_t i = 0; i < m; ++i)
            if (fixed_x[i] == 1) r.d[b] += inst.q(i, j);
    }
    return r;
}

Solution ReducedInstance::expand(const BinaryVector& x_free, const BinaryVector& y_free, Rational value) const {
    Solution s;
    s.x.resize(fixed_x.size());
    s.y.resize(fixed_y.size());
    for (std::size_t i = 0; i < fixed_x.size(); ++i) s.x[i] = fixed_x[i] > 0 ? 1 : 0;
    for (std::size_t j = 0; j < fixed_y.size(); ++j) s.y[j] = fixed_y[j] > 0 ? 1 : 0;
    for (std::size_t a = 0; a < free_rows.size(); ++a) s.x[free_rows[a]] = x_free[a];
    for (std::size_t b = 0; b < free_cols.size(); ++b) s.y[free_cols[b]] = y_free[b];
    s.value = std::move(value);
    return s;
}

Rational evaluate_reduced(const ReducedInstance& r, const BinaryVector& x_free, const BinaryVector& y_free) {
    if (x_free.size() != r.free_rows.size() || y_free.size() != r.free_cols.size())
        throw DimensionError("free assignment length mismatch");
    Rational value = r.constant;
    for (std::size_t a = 0; a < x_free.size(); ++a) {
        if (!x_free[a]) continue;
        value += r.c[a];
        for (std::size_t b = 0; b < y_free.size(); ++b)
            if (y_free[b]) value += r.q(a, b);
    }
    for (std::size_t b = 0; b < y_free.size(); ++b)
        if (y_free[b]) value += r.d[b];
    return value;
}

Solution solve_reduced(const ReducedInstance& r) {
    Solution free = solve_terms({r.q, r.c, r.d, r.constant});
    return r.expand(free.x, free.y, std::move(free.value));
}

Solution solve_with_eliminator(const Instance& inst, const Eliminator& elim, const EliminatorOptions& options) {
    const std::size_t size = elim.size();
    const std::size_t limit = std::min<std::size_t>(options.size_limit, 62);
    if (size > limit)
        throw RefusalError("eliminator solver refused: eliminator size " + std::to_string(size) + " exceeds limit " +
                               std::to_string(limit),
                           limit, size);

    auto solve_fixing = [&](std::uint64_t mask) {
        std::vector<std::int8_t> fx(inst.rows(), -1), fy(inst.cols(), -1);
        std::size_t bit = 0;
        for (std::size_t i : elim.rows) fx[i] = static_cast<std::int8_t>((mask >> bit++) & 1u);
        for (std::size_t j : elim.cols) fy[j] = static_cast<std::int8_t>((mask >> bit++) & 1u);
        return solve_reduced(fold_fixings(inst, fx, fy));
    };

    const std::uint64_t total = std::uint64_t{1} << size;
    Solution best;
    if (options.execution == Execution::serial) {
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Solution s = solve_fixing(mask);
            if (improves(s.value, s.x, s.y, best)) best = std::move(s);
        }
    } else {
#pragma omp parallel
        {
            Solution local;
#pragma omp for schedule(dynamic) nowait
            for (long mask = 0; mask < static_cast<long>(total); ++mask) {
                Solution s = solve_fixing(static_cast<std::uint64_t>(mask));
                if (improves(s.value, s.x, s.y, local)) local = std::move(s);
            }
#pragma omp critical
            if (!local.x.empty() && improves(local.value, local.x, local.y, best)) best = std::move(local);
        }
    }
    return best;
}

}  // namespace bqp
