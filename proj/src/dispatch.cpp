#include "bqp/dispatch.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "bqp/additive.hpp"
#include "bqp/enumeration.hpp"
#include "bqp/error.hpp"
#include "bqp/fixed_rank.hpp"
#include "bqp/mincut.hpp"
#include "bqp/rank_one.hpp"
#include "bqp/transform.hpp"

namespace bqp {

namespace {

constexpr std::pair<Algorithm, std::string_view> kNames[] = {
    {Algorithm::automatic, "auto"},     {Algorithm::oracle, "oracle"},   {Algorithm::enumeration, "enum"},
    {Algorithm::rank1, "rank1"},        {Algorithm::rankp, "rankp"},     {Algorithm::additive, "additive"},
    {Algorithm::mincut, "mincut"},      {Algorithm::eliminator, "eliminator"},
};

std::string yes_no(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "not computed"; }

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(v[k] + 1);
    }
    return out.empty() ? "-" : out;
}

Solution run(const Instance& inst, Algorithm algorithm, const SolveOptions& options, AnalysisReport& report) {
    switch (algorithm) {
        case Algorithm::oracle:
            return solve_oracle(inst, options.oracle_limit);
        case Algorithm::enumeration:
            return solve_enumeration(inst, {options.m_limit, options.execution});
        case Algorithm::rank1: {
            auto form = rank_one_form(inst);
            if (!form) throw PreconditionError("rank1 solver needs rank(Q) <= 1");
            report.rank = rank_factorize(inst.q()).rank;
            Solution s = solve_rank_one(*form);
            return s;
        }
        case Algorithm::rankp: {
            auto r = solve_fixed_rank(inst, {options.p_limit, options.dual_filter, options.execution});
            report.rank = r.rank;
            return std::move(r.solution);
        }
        case Algorithm::additive: {
            auto dec = detect_additive(inst.q());
            report.additive = dec.has_value();
            if (!dec) throw PreconditionError("additive solver needs q_ij = a_i + b_j");
            return solve_additive(inst, *dec, options.execution);
        }
        case Algorithm::mincut:
            report.nonnegative = detect_nonnegative(inst.q());
            if (!*report.nonnegative) throw PreconditionError("mincut solver needs a nonnegative Q");
            return solve_nonnegative(inst);
        case Algorithm::eliminator: {
            auto elim = min_negative_eliminator(inst.q());
            report.eliminator = elim;
            return solve_with_eliminator(inst, elim, {options.eliminator_limit, options.execution});
        }
        case Algorithm::automatic:
            break;
    }
    throw std::logic_error("automatic is resolved before run()");
}

Algorithm choose(const Instance& inst, const SolveOptions& options, AnalysisReport& report) {
    report.nonnegative = detect_nonnegative(inst.q());
    if (*report.nonnegative) return Algorithm::mincut;
    report.additive = detect_additive(inst.q()).has_value();
    if (*report.additive) return Algorithm::additive;
    report.rank = rank_factorize(inst.q()).rank;
    if (*report.rank <= 1) return Algorithm::rank1;
    if (*report.rank <= options.p_limit) return Algorithm::rankp;
    if (inst.rows() <= options.m_limit) return Algorithm::enumeration;
    report.eliminator = min_negative_eliminator(inst.q());
    if (report.eliminator->size() <= options.eliminator_limit) return Algorithm::eliminator;
    throw NoSolverError("no exact solver applies within the configured limits", report);
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (const auto& [a, n] : kNames)
        if (n == name) return a;
    return std::nullopt;
}

std::string algorithm_name(Algorithm a) {
    for (const auto& [alg, n] : kNames)
        if (alg == a) return std::string(n);
    return "?";
}

AnalysisReport analyze(const Instance& inst) {
    AnalysisReport r;
    r.m = inst.rows();
    r.n = inst.cols();
    r.nonnegative = detect_nonnegative(inst.q());
    r.additive = detect_additive(inst.q()).has_value();
    r.rank = rank_factorize(inst.q()).rank;
    r.eliminator = min_negative_eliminator(inst.q());
    return r;
}

std::string format_report(const AnalysisReport& report) {
    std::ostringstream out;
    out << "size " << report.m << " x " << report.n << "\n";
    out << "rank " << (report.rank ? std::to_string(*report.rank) : std::string("not computed")) << "\n";
    out << "additive " << yes_no(report.additive) << "\n";
    out << "nonnegative " << yes_no(report.nonnegative) << "\n";
    if (report.eliminator) {
        out << "eliminator " << report.eliminator->size() << " rows " << join_indices(report.eliminator->rows)
            << " cols " << join_indices(report.eliminator->cols) << "\n";
    } else {
        out << "eliminator not computed\n";
    }
    return out.str();
}

SolveReport dispatch_solve(const Instance& inst, Algorithm algorithm, const SolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    auto oriented = normalize_orientation(inst);
    SolveReport report;
    report.analysis.m = inst.rows();
    report.analysis.n = inst.cols();
    report.algorithm = algorithm == Algorithm::automatic ? choose(oriented.instance, options, report.analysis)
                                                         : algorithm;
    report.solution = orient_back(run(oriented.instance, report.algorithm, options, report.analysis),
                                  oriented.transposed);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<BenchRow> run_bench(const std::vector<NamedInstance>& instances, const std::vector<Algorithm>& algorithms,
                                const SolveOptions& options) {
    std::vector<BenchRow> rows;
    for (const auto& item : instances) {
        const std::size_t first = rows.size();
        for (Algorithm a : algorithms) {
            auto rep = dispatch_solve(item.instance, a, options);
            rows.push_back({item.name, rep.algorithm, rep.solution.value, rep.seconds});
            if (a == Algorithm::automatic) rows.back().algorithm = Algorithm::automatic;
            if (rows.back().value != rows[first].value)
                throw CrossValidationError("value mismatch on " + item.name + ": " + algorithm_name(a) + " gives " +
                                               to_string(rows.back().value) + ", " +
                                               algorithm_name(rows[first].algorithm) + " gives " +
                                               to_string(rows[first].value),
                                           rows);
        }
    }
    return rows;
}

std::string format_bench_text(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-24s %-11s %-20s %12s\n", "instance", "algorithm", "value", "seconds");
    out << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-24s %-11s %-20s %12.6f\n", r.instance.c_str(),
                      algorithm_name(r.algorithm).c_str(), to_string(r.value).c_str(), r.seconds);
        out << line;
    }
    return out.str();
}

std::string format_bench_kv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.6f", r.seconds);
        out << "instance=" << r.instance << " algorithm=" << algorithm_name(r.algorithm)
            << " value=" << to_string(r.value) << " time=" << secs << "\n";
    }
    return out.str();
}

}  // namespace bqp
