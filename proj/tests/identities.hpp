#pragma once

// Exhaustive checks of every transformation identity on one random
// instance. Each returns the list of violated identities (empty = pass).

#include <string>
#include <vector>

#include "bqp/transform.hpp"
#include "support.hpp"

namespace testing {

inline bqp::SpinVector to_spins(const bqp::BinaryVector& v) {
    bqp::SpinVector s;
    for (auto b : v) s.push_back(b ? 1 : -1);
    return s;
}

inline bqp::BinaryVector concat(const bqp::BinaryVector& a, const bqp::BinaryVector& b) {
    bqp::BinaryVector out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline bqp::BipartiteWeightedGraph random_graph(bqp::SplitMix64& rng, std::size_t m, std::size_t n, bool positive) {
    std::vector<bqp::WeightedEdge> edges;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng.uniform(0, 2) != 0) {
                Rational w = positive ? Rational(rng.uniform(1, 7)) : Rational(rng.uniform(-7, 7), 2);
                w.canonicalize();
                edges.push_back({i, j, w});
            }
    return bqp::BipartiteWeightedGraph(m, n, std::move(edges));
}

inline std::vector<std::string> check_transform_identities(const Instance& inst, bqp::SplitMix64& rng) {
    using namespace bqp;
    std::vector<std::string> failed;
    auto fail_if = [&](bool bad, const std::string& what) {
        if (bad && (failed.empty() || failed.back() != what)) failed.push_back(what);
    };
    const std::size_t m = inst.rows(), n = inst.cols();
    const Rational opt = brute_force(inst);

    // orientation
    auto oriented = normalize_orientation(inst);
    for_all_points(m, n, [&](const BinaryVector& x, const BinaryVector& y) {
        Rational v = oriented.transposed ? evaluate_objective(oriented.instance, y, x)
                                         : evaluate_objective(oriented.instance, x, y);
        fail_if(v != naive_value(inst, x, y), "orientation");
    });

    // homogeneous: on the face x_{m+1} = y_{n+1} = 1 the value is f - c0 + M
    auto hom = to_homogeneous(inst);
    for_all_points(m, n, [&](const BinaryVector& x, const BinaryVector& y) {
        Rational v = evaluate_objective(hom.instance, concat(x, bits({1})), concat(y, bits({1})));
        fail_if(v != naive_value(inst, x, y) - inst.c0() + hom.big_m, "homogeneous face");
    });
    fail_if(brute_force(hom.instance) - hom.big_m + inst.c0() != opt, "homogeneous optimum");

    // cut form both ways
    auto cut = bqp01_to_cut(inst);
    for_all_points(m, n, [&](const BinaryVector& x, const BinaryVector& y) {
        fail_if(evaluate_cut_objective(cut, to_spins(x), to_spins(y)) != naive_value(inst, x, y), "bqp01_to_cut");
    });
    fail_if(!(cut_to_bqp01(cut) == inst), "cut round trip");
    CutInstance spin{random_instance(rng, m, n)};
    auto back = cut_to_bqp01(spin);
    for_all_points(m, n, [&](const BinaryVector& w, const BinaryVector& z) {
        fail_if(evaluate_objective(back, w, z) != evaluate_cut_objective(spin, to_spins(w), to_spins(z)),
                "cut_to_bqp01");
    });
    fail_if(!(bqp01_to_cut(back) == spin), "bqp01 round trip");

    // block QP01 form
    auto qp = bqp01_to_qp01(inst);
    for_all_points(m, n, [&](const BinaryVector& x, const BinaryVector& y) {
        fail_if(evaluate_qp01(qp, concat(x, y)) != naive_value(inst, x, y), "bqp01_to_qp01");
    });

    // big-M embedding of a square problem built from the instance's leading block
    const std::size_t s = std::min(m, n);
    Qp01Problem sq{Matrix(s, s), std::vector<Rational>(s), inst.c0()};
    for (std::size_t i = 0; i < s; ++i) {
        sq.c[i] = inst.c()[i];
        for (std::size_t j = 0; j < s; ++j) sq.q(i, j) = inst.q(i, j);
    }
    auto emb = qp01_to_bqp01(sq);
    for_all_points(s, s, [&](const BinaryVector& x, const BinaryVector& y) {
        Rational expect = sq.c0;
        std::size_t mismatch = 0;
        for (std::size_t i = 0; i < s; ++i) {
            expect += (sq.c[i] * (x[i] + y[i])) / 2;
            mismatch += x[i] != y[i];
            for (std::size_t j = 0; j < s; ++j)
                if (x[i] && y[j]) expect += sq.q(i, j);
        }
        expect -= emb.big_m * static_cast<unsigned long>(mismatch);
        fail_if(evaluate_objective(emb.instance, x, y) != expect, "qp01 embedding penalty");
    });
    {
        Rational best_qp;
        bool first = true;
        for (std::uint64_t w = 0; w < (1ULL << s); ++w) {
            Rational v = evaluate_qp01(sq, bits_to_vector(w, s));
            if (first || v > best_qp) best_qp = v, first = false;
        }
        fail_if(brute_force(emb.instance) != best_qp, "qp01 embedding optimum");
    }

    // homogeneous cut form <-> bipartite max cut
    Instance hq(inst.q(), std::vector<Rational>(m), std::vector<Rational>(n), 0);
    CutInstance hcut{hq};
    auto graph = bqp11h_to_bmaxcut(hcut);
    Rational sum_q = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) sum_q += inst.q(i, j);
    for_all_points(m, n, [&](const BinaryVector& x, const BinaryVector& y) {
        auto w = to_spins(x), z = to_spins(y);
        fail_if(evaluate_cut_objective(hcut, w, z) != sum_q + cut_value(graph, w, z), "bqp11h_to_bmaxcut");
    });

    auto g = random_graph(rng, m, n, false);
    auto gcut = bmaxcut_to_bqp11h(g);
    Rational half_w = 0;
    for (const auto& e : g.edges()) half_w += e.weight / 2;
    for_all_points(m, n, [&](const BinaryVector& x, const BinaryVector& y) {
        auto w = to_spins(x), z = to_spins(y);
        fail_if(cut_value(g, w, z) != half_w + evaluate_cut_objective(gcut, w, z), "bmaxcut_to_bqp11h");
    });

    // biclique: optimum equals the heaviest complete bipartite subgraph
    auto pg = random_graph(rng, m, n, true);
    auto weights = pg.weight_matrix();
    std::vector<std::vector<bool>> present(m, std::vector<bool>(n, false));
    for (const auto& e : pg.edges()) present[e.left][e.right] = true;
    Rational best_clique = 0;
    for_all_points(m, n, [&](const BinaryVector& x, const BinaryVector& y) {
        Rational w = 0;
        bool complete = true;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (x[i] && y[j]) {
                    complete = complete && present[i][j];
                    w += weights(i, j);
                }
        if (complete && w > best_clique) best_clique = w;
    });
    fail_if(brute_force(mwbp_to_bqp01(pg)) != best_clique, "mwbp optimum");

    // binary rank-one approximation error
    Matrix h(m, n);
    Rational sum_h = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) sum_h += (h(i, j) = rng.uniform(0, 1));
    auto approx = rank1_binary_approx_to_bqp01(h);
    for_all_points(m, n, [&](const BinaryVector& u, const BinaryVector& v) {
        fail_if(rank1_approx_error(h, u, v) != sum_h + evaluate_objective(approx, u, v), "rank1 approximation");
    });

    return failed;
}

}  // namespace testing
