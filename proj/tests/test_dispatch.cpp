#include <doctest.h>

#include "bqp/dispatch.hpp"
#include "bqp/enumeration.hpp"
#include "bqp/error.hpp"
#include "bqp/generate.hpp"
#include "bqp/io.hpp"
#include "support.hpp"

using namespace bqp;
using namespace testing;

TEST_CASE("generator kinds") {
    CHECK(generate_instance("general", 4, 5, 7) == generate_instance("general", 4, 5, 7));
    CHECK_FALSE(generate_instance("general", 4, 5, 7) == generate_instance("general", 4, 5, 8));
    CHECK(rank_factorize(generate_instance("rank1", 5, 7, 3).q()).rank == 1);
    CHECK(rank_factorize(generate_instance("rank3", 6, 6, 3).q()).rank == 3);
    CHECK(rank_factorize(generate_instance("rank4", 2, 6, 3).q()).rank == 2);
    CHECK(detect_additive(generate_instance("additive", 4, 6, 3).q()));
    CHECK(detect_nonnegative(generate_instance("nonnegative", 4, 6, 3).q()));
    for (std::uint64_t s = 0; s < 50; ++s)
        CHECK(min_negative_eliminator(generate_instance("sparse-negative4", 6, 6, s).q()).size() <= 4);
    auto flat = generate_instance("general", 3, 3, 1, {9, false});
    CHECK(flat.is_homogeneous());
    CHECK_THROWS_AS(generate_instance("banana", 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_instance("rank", 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_instance("general", 0, 2, 1), std::invalid_argument);
}

TEST_CASE("automatic dispatch picks the documented solver") {
    auto fig = dispatch_solve(fig1(), Algorithm::automatic);
    CHECK(fig.algorithm == Algorithm::rank1);
    CHECK(fig.solution.value == 56);
    auto nn = dispatch_solve(tnn(), Algorithm::automatic);
    CHECK(nn.algorithm == Algorithm::mincut);
    CHECK(nn.solution.value == 0);
    auto add = dispatch_solve(tadd(), Algorithm::automatic);
    CHECK(add.algorithm == Algorithm::additive);
    CHECK(add.solution.value == 4);
    CHECK(add.analysis.additive.value_or(false));
    CHECK_FALSE(add.analysis.rank.has_value());

    auto general = generate_instance("general", 8, 9, 5);
    auto g = dispatch_solve(general, Algorithm::automatic);
    CHECK(g.algorithm == Algorithm::enumeration);
    CHECK(g.analysis.rank == std::optional<std::size_t>(8));

    SolveOptions tight;
    tight.m_limit = 3;
    tight.p_limit = 2;
    tight.eliminator_limit = 30;
    CHECK(dispatch_solve(general, Algorithm::automatic, tight).algorithm == Algorithm::eliminator);
    tight.eliminator_limit = 1;
    try {
        dispatch_solve(general, Algorithm::automatic, tight);
        FAIL("expected refusal");
    } catch (const NoSolverError& e) {
        CHECK(e.report().rank == std::optional<std::size_t>(8));
        CHECK(e.report().eliminator.has_value());
        CHECK(format_report(e.report()).find("rank 8") != std::string::npos);
    }

    CHECK_THROWS_AS(dispatch_solve(t1(), Algorithm::mincut), PreconditionError);
    CHECK_THROWS_AS(dispatch_solve(fig1(), Algorithm::additive), PreconditionError);
    CHECK_THROWS_AS(dispatch_solve(tadd(), Algorithm::rank1), PreconditionError);
}

TEST_CASE("dispatch maps transposed instances back") {
    SplitMix64 rng(51);
    for (int t = 0; t < 200; ++t) {
        auto inst = random_instance(rng, dim(rng, 1, 5), dim(rng, 1, 5), 3);
        auto oracle = solve_oracle(inst);
        for (auto a : {Algorithm::automatic, Algorithm::enumeration, Algorithm::rankp, Algorithm::eliminator}) {
            auto rep = dispatch_solve(inst, a);
            REQUIRE(rep.solution.x.size() == inst.rows());
            REQUIRE(rep.solution.y.size() == inst.cols());
            REQUIRE(rep.solution.value == oracle.value);
            REQUIRE(evaluate_objective(inst, rep.solution.x, rep.solution.y) == oracle.value);
        }
    }
}

TEST_CASE("analysis report") {
    auto r = analyze(fig1());
    CHECK(r.rank == std::optional<std::size_t>(1));
    CHECK(r.additive == std::optional<bool>(false));
    CHECK(r.nonnegative == std::optional<bool>(false));
    REQUIRE(r.eliminator);
    CHECK(r.eliminator->size() == 5);
    auto text = format_report(r);
    CHECK(text.find("size 5 x 7") != std::string::npos);
    CHECK(text.find("rank 1") != std::string::npos);
    CHECK(text.find("additive no") != std::string::npos);
    CHECK(parse_algorithm("rankp") == std::optional<Algorithm>(Algorithm::rankp));
    CHECK_FALSE(parse_algorithm("simplex"));
    CHECK(algorithm_name(Algorithm::enumeration) == "enum");
}

TEST_CASE("bench cross-validation") {
    auto rows = run_bench({{"fig1", fig1()}}, {Algorithm::oracle, Algorithm::rank1, Algorithm::rankp});
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) CHECK(row.value == 56);
    auto add = run_bench({{"tadd", tadd()}}, {Algorithm::oracle, Algorithm::additive, Algorithm::rankp});
    for (const auto& row : add) CHECK(row.value == 4);
    CHECK(run_bench({}, {Algorithm::oracle}).empty());

    auto kv = format_bench_kv(rows);
    CHECK(kv.find("instance=fig1 algorithm=rank1 value=56 time=") != std::string::npos);
    auto text = format_bench_text(rows);
    CHECK(text.find("instance") == 0);
    CHECK(text.find("rankp") != std::string::npos);

    CHECK_THROWS_AS(run_bench({{"t1", t1()}}, {Algorithm::oracle, Algorithm::mincut}), PreconditionError);
}

TEST_CASE("fixture files match the in-code fixtures") {
    auto load = [](const char* name) {
        std::string path = std::string(BQP_DATA_DIR) + "/" + name;
        FILE* f = std::fopen(path.c_str(), "rb");
        REQUIRE(f);
        std::string text;
        char buf[4096];
        for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, f)) > 0;) text.append(buf, got);
        std::fclose(f);
        return parse_instance(text).terms;
    };
    CHECK(load("fig1.bqp") == fig1());
    CHECK(load("t1.bqp") == t1());
    CHECK(load("tadd.bqp") == tadd());
    CHECK(load("tnn.bqp") == tnn());
}
