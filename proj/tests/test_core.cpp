#include <doctest.h>

#include "bqp/error.hpp"
#include "bqp/io.hpp"
#include "bqp/transform.hpp"
#include "identities.hpp"
#include "support.hpp"

using namespace bqp;
using namespace testing;

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("-2.5") == Rational(-5, 2));
    CHECK(parse_rational("+4") == 4);
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    for (const char* bad : {"", "-", "1/0", "a", "1/2/3", "1e3", "--1", "1/-2"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_decimal(Rational(59, 4)) == "14.75");
}

TEST_CASE("matrix basics") {
    auto a = mat({{1, 2}, {3, 4}});
    CHECK(a.transposed() == mat({{1, 3}, {2, 4}}));
    CHECK(a * Matrix::identity(2) == a);
    CHECK(a * a == mat({{7, 10}, {15, 22}}));
    CHECK(Matrix(2, 3).is_zero());
    CHECK(a.column(1) == vec({2, 4}));
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(Instance(Matrix(0, 2), {}, vec({0, 0})), DimensionError);
    CHECK_THROWS_AS(Instance(Matrix(2, 2), vec({1}), vec({0, 0})), DimensionError);
    CHECK_THROWS_AS(Instance(Matrix(2, 2), vec({1, 2}), vec({0})), DimensionError);
    CHECK(Instance::zero(2, 3).is_homogeneous());
    CHECK_FALSE(t1().is_homogeneous());
    CHECK(t1().big_m() == 11);
    CHECK_THROWS_AS(BipartiteWeightedGraph(2, 2, {{0, 0, 1}, {0, 0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteWeightedGraph(2, 2, {{2, 0, 1}}), std::invalid_argument);
}

TEST_CASE("objective evaluation") {
    CHECK(evaluate_objective(t1(), bits({0, 1}), bits({1, 1})) == 4);
    CHECK(evaluate_objective(fig1(), bits({0, 0, 1, 0, 1}), bits({1, 0, 1, 1, 1, 1, 0})) == 56);
    Instance shifted(t1().q(), t1().c(), t1().d(), Rational(5, 3));
    CHECK(evaluate_objective(shifted, bits({0, 0}), bits({0, 0})) == Rational(5, 3));
    CHECK_THROWS_AS(evaluate_objective(t1(), bits({1}), bits({1, 1})), DimensionError);
    CHECK(brute_force(t1()) == 4);
    CHECK(brute_force(tadd()) == 4);
    CHECK(brute_force(tnn()) == 0);
    CHECK(brute_force(fig1()) == 56);

    SplitMix64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto inst = random_instance(rng, dim(rng, 1, 4), dim(rng, 1, 4));
        for_all_points(inst.rows(), inst.cols(), [&](const BinaryVector& x, const BinaryVector& y) {
            REQUIRE(evaluate_objective(inst, x, y) == naive_value(inst, x, y));
        });
    }
}

TEST_CASE("lexicographic incumbent rule") {
    Solution inc{bits({0, 1}), bits({1}), 3};
    CHECK(improves(4, bits({1, 1}), bits({1}), inc));
    CHECK_FALSE(improves(2, bits({0, 0}), bits({0}), inc));
    CHECK(improves(3, bits({0, 0}), bits({1}), inc));
    CHECK(improves(3, bits({0, 1}), bits({0}), inc));
    CHECK_FALSE(improves(3, bits({1, 0}), bits({0}), inc));
    CHECK(improves(-100, bits({1}), bits({1}), Solution{}));
}

TEST_CASE("orientation") {
    SplitMix64 rng(2);
    auto wide = random_instance(rng, 2, 3);
    auto o = normalize_orientation(wide);
    CHECK_FALSE(o.transposed);
    CHECK(o.instance == wide);
    auto tall = random_instance(rng, 3, 2);
    auto t = normalize_orientation(tall);
    CHECK(t.transposed);
    CHECK(t.instance.rows() == 2);
    CHECK(t.instance.cols() == 3);
    for_all_points(3, 2, [&](const BinaryVector& x, const BinaryVector& y) {
        CHECK(evaluate_objective(t.instance, y, x) == evaluate_objective(tall, x, y));
    });
    Solution s{bits({1, 0}), bits({0, 1, 1}), 7};
    auto back = orient_back(s, true);
    CHECK(back.x == bits({0, 1, 1}));
    CHECK(back.y == bits({1, 0}));
}

TEST_CASE("homogeneous form") {
    auto h = to_homogeneous(t1());
    CHECK(h.big_m == 11);
    const auto& q = h.instance.q();
    CHECK(q(0, 2) == 1);
    CHECK(q(1, 2) == -1);
    CHECK(q(2, 0) == 0);
    CHECK(q(2, 1) == 2);
    CHECK(q(2, 2) == 11);
    CHECK(q(0, 1) == -2);
    CHECK(h.instance.is_homogeneous());
    CHECK(brute_force(h.instance) - h.big_m == 4);

    auto z = to_homogeneous(Instance::zero(2, 2));
    CHECK(brute_force(z.instance) == z.big_m);
    CHECK(evaluate_objective(z.instance, bits({0, 0, 1}), bits({0, 0, 1})) == z.big_m);

    // a nonzero c0 is dropped and has to be added back
    Instance shifted(t1().q(), t1().c(), t1().d(), 5);
    auto hs = to_homogeneous(shifted);
    CHECK(brute_force(hs.instance) - hs.big_m + 5 == 9);
}

TEST_CASE("cut transformations") {
    auto cut = bqp01_to_cut(Instance(mat({{4}}), vec({0}), vec({0}), 0));
    CHECK(cut.terms.q() == mat({{1}}));
    CHECK(cut.terms.c() == vec({1}));
    CHECK(cut.terms.d() == vec({1}));
    CHECK(cut.terms.c0() == 1);
    CHECK(evaluate_cut_objective(cut, SpinVector{1}, SpinVector{1}) == 4);
    CHECK(evaluate_cut_objective(cut, SpinVector{-1}, SpinVector{-1}) == 0);

    auto back = cut_to_bqp01(CutInstance{Instance(mat({{1}}), vec({0}), vec({0}), 0)});
    CHECK(back.q() == mat({{4}}));
    CHECK(back.c() == vec({-2}));
    CHECK(back.d() == vec({-2}));
    CHECK(back.c0() == 1);

    CHECK(bqp01_to_cut(Instance::zero(2, 3)) == CutInstance{Instance::zero(2, 3)});
    CHECK(cut_to_bqp01(CutInstance{Instance::zero(2, 3)}) == Instance::zero(2, 3));
    CHECK(cut_to_bqp01(bqp01_to_cut(t1())) == t1());
    CHECK_THROWS_AS(evaluate_cut_objective(cut, SpinVector{0}, SpinVector{1}), std::invalid_argument);
}

TEST_CASE("qp01 embeddings") {
    Qp01Problem p{mat({{2}}), vec({-3}), 0};
    auto e = qp01_to_bqp01(p, Rational(10));
    CHECK(e.instance.q() == mat({{22}}));
    CHECK(e.instance.c() == vec({Rational(-23, 2)}));
    CHECK(e.instance.d() == vec({Rational(-23, 2)}));
    CHECK(brute_force(e.instance) == 0);
    CHECK(evaluate_objective(e.instance, bits({0}), bits({0})) == 0);

    CHECK(brute_force(qp01_to_bqp01(Qp01Problem{Matrix(2, 2), vec({0, 0}), 0}).instance) == 0);

    Qp01Problem p2{mat({{0, 3}, {3, 0}}), vec({-1, -1}), 0};
    CHECK(evaluate_qp01(p2, bits({1, 1})) == 4);
    auto e2 = qp01_to_bqp01(p2);
    CHECK(brute_force(e2.instance) == 4);
    CHECK(evaluate_objective(e2.instance, bits({1, 1}), bits({1, 1})) == 4);

    auto block = bqp01_to_qp01(t1());
    REQUIRE(block.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            bool upper_right = i < 2 && j >= 2;
            CHECK(block.q(i, j) == (upper_right ? t1().q(i, j - 2) : Rational(0)));
        }
    for_all_points(2, 2, [&](const BinaryVector& x, const BinaryVector& y) {
        CHECK(evaluate_qp01(block, concat(x, y)) == evaluate_objective(t1(), x, y));
    });
    CHECK(bqp01_to_qp01(Instance::zero(1, 2)).q.is_zero());
}

TEST_CASE("bipartite max cut equivalence") {
    auto g1 = bqp11h_to_bmaxcut(CutInstance{Instance(mat({{1}}), vec({0}), vec({0}), 0)});
    REQUIRE(g1.edges().size() == 1);
    CHECK(g1.edges()[0].weight == -2);
    CHECK(cut_value(g1, SpinVector{1}, SpinVector{-1}) == -2);
    CHECK(cut_value(g1, SpinVector{1}, SpinVector{1}) == 0);

    auto g2 = bqp11h_to_bmaxcut(CutInstance{Instance(mat({{-1}}), vec({0}), vec({0}), 0)});
    CHECK(g2.edges()[0].weight == 2);
    CHECK(cut_value(g2, SpinVector{-1}, SpinVector{1}) == 2);

    CHECK_THROWS_AS(bqp11h_to_bmaxcut(CutInstance{t1()}), PreconditionError);

    auto h = bmaxcut_to_bqp11h(BipartiteWeightedGraph(1, 1, {{0, 0, 4}}));
    CHECK(h.terms.q() == mat({{-2}}));
    CHECK(bmaxcut_to_bqp11h(BipartiteWeightedGraph(2, 2, {})).terms.q().is_zero());
    auto h2 = bmaxcut_to_bqp11h(BipartiteWeightedGraph(2, 2, {{0, 0, 2}, {1, 1, -2}}));
    CHECK(h2.terms.q() == mat({{-1, 0}, {0, 1}}));
}

TEST_CASE("biclique and approximation reductions") {
    auto k22 = mwbp_to_bqp01(BipartiteWeightedGraph(2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}}));
    CHECK(brute_force(k22) == 4);
    CHECK(evaluate_objective(k22, bits({1, 1}), bits({1, 1})) == 4);
    auto single = mwbp_to_bqp01(BipartiteWeightedGraph(2, 2, {{0, 0, 5}}));
    CHECK(brute_force(single) == 5);
    CHECK(evaluate_objective(single, bits({1, 0}), bits({1, 0})) == 5);
    CHECK(single.q(1, 1) == -6);
    CHECK(brute_force(mwbp_to_bqp01(BipartiteWeightedGraph(2, 2, {}))) == 0);
    CHECK_THROWS_AS(mwbp_to_bqp01(BipartiteWeightedGraph(1, 1, {{0, 0, 0}})), PreconditionError);

    auto a1 = rank1_binary_approx_to_bqp01(mat({{1}}));
    CHECK(a1.q() == mat({{-1}}));
    CHECK(rank1_approx_error(mat({{1}}), bits({1}), bits({1})) == 0);
    // the best approximation minimizes f, i.e. maximizes the negated instance
    CHECK(-brute_force(negated(a1)) + 1 == 0);
    auto a2 = rank1_binary_approx_to_bqp01(mat({{1, 0}, {0, 1}}));
    CHECK(a2.q() == mat({{-1, 1}, {1, -1}}));
    CHECK(-brute_force(negated(a2)) + 2 == 1);
    CHECK(-brute_force(negated(rank1_binary_approx_to_bqp01(Matrix(2, 2)))) == 0);
    CHECK_THROWS_AS(rank1_binary_approx_to_bqp01(mat({{2}})), PreconditionError);
}

TEST_CASE("transformation identities hold on every point") {
    SplitMix64 rng(17);
    for (int t = 0; t < 60; ++t) {
        auto inst = random_instance(rng, dim(rng, 1, 3), dim(rng, 1, 3));
        auto failed = check_transform_identities(inst, rng);
        CHECK_MESSAGE(failed.empty(), (failed.empty() ? "" : failed.front()));
    }
}

TEST_CASE("instance text round trip and errors") {
    auto text = format_instance(t1());
    CHECK(text == "bqp01\n2 2\n0\n1 -1\n0 2\n1 -2\n3 0\n");
    CHECK(parse_instance(text).terms == t1());
    CHECK(format_instance(parse_instance(text).terms) == text);

    auto parsed = parse_instance("# comment\nbqp11\n1 2  # dims\n\n7/3\n-2.5\n0 1\n1/2 -1\n");
    CHECK(parsed.domain == VariableDomain::spin);
    CHECK(parsed.terms.c0() == Rational(7, 3));
    CHECK(parsed.terms.c()[0] == Rational(-5, 2));
    CHECK(parsed.terms.q(0, 0) == Rational(1, 2));

    SplitMix64 rng(9);
    for (int t = 0; t < 100; ++t) {
        auto inst = random_instance(rng, dim(rng, 1, 5), dim(rng, 1, 5));
        REQUIRE(parse_instance(format_instance(inst)).terms == inst);
    }

    auto line_of = [](const std::string& s) {
        try {
            parse_instance(s);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), std::string(e.what()));
        }
        return std::make_pair(std::size_t{0}, std::string());
    };
    auto [line, msg] = line_of("bqp01\n2 2\n0\n1 -1\n0 2\n1 -2\n3\n");
    CHECK(line == 7);
    CHECK(msg.find("Q row 2") != std::string::npos);
    CHECK(line_of("bqp01\n2 2\n0\n1 -1\n0 2\n1 -2\n").second.find("Q row 2") != std::string::npos);
    CHECK(line_of("bqp02\n").first == 1);
    CHECK(line_of("bqp01\n0 2\n").first == 2);
    CHECK(line_of("bqp01\n1 1\n0\nx\n0\n1\n").first == 4);
    CHECK(line_of("bqp01\n1 1\n0\n1\n0\n1\n9\n").first == 7);

    Qp01Problem qp{mat({{1, Rational(1, 2)}, {0, -3}}), vec({2, 0}), 1};
    auto qp_back = parse_qp01(format_qp01(qp));
    CHECK(qp_back.q == qp.q);
    CHECK(qp_back.c == qp.c);
    CHECK(qp_back.c0 == 1);
    CHECK(peek_header("# x\n\nqp01\n1\n") == "qp01");

    CHECK(format_solution(Solution{bits({0, 1}), bits({1, 1, 0}), Rational(59, 4)}) ==
          "value 59/4 14.75\nx 01\ny 110\n");
}
