#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bqp/analysis.hpp"
#include "bqp/instance.hpp"

namespace bqp {

enum class Algorithm { automatic, oracle, enumeration, rank1, rankp, additive, mincut, eliminator };

/// Parses the CLI names auto|oracle|enum|rank1|rankp|additive|mincut|eliminator.
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string algorithm_name(Algorithm a);

struct SolveOptions {
    std::size_t m_limit = 25;
    std::size_t p_limit = 6;
    std::size_t eliminator_limit = 25;
    std::size_t oracle_limit = 24;
    bool dual_filter = true;
    Execution execution = Execution::parallel;
};

/// Structure found in Q. Fields stay empty when dispatch stopped before
/// computing them.
struct AnalysisReport {
    std::size_t m = 0;
    std::size_t n = 0;
    std::optional<bool> nonnegative;
    std::optional<bool> additive;
    std::optional<std::size_t> rank;
    std::optional<Eliminator> eliminator;
};

/// Runs every detector.
AnalysisReport analyze(const Instance& inst);

std::string format_report(const AnalysisReport& report);

struct SolveReport {
    Solution solution;
    Algorithm algorithm;
    AnalysisReport analysis;
    double seconds = 0;
};

/// No solver applies within the configured limits. Carries the analysis.
class NoSolverError : public std::runtime_error {
 public:
    NoSolverError(const std::string& what, AnalysisReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const AnalysisReport& report() const { return report_; }

 private:
    AnalysisReport report_;
};

/// Solves with the requested algorithm. `automatic` tries, in order:
/// nonnegative Q -> mincut, additive Q -> additive, rank <= p_limit ->
/// rank1 (rank <= 1) or rankp, m <= m_limit -> enum, eliminator within
/// limit -> eliminator; otherwise NoSolverError. Instances with m > n are
/// solved transposed and mapped back.
///
/// An explicit algorithm whose precondition fails throws PreconditionError
/// (or RefusalError for limits).
SolveReport dispatch_solve(const Instance& inst, Algorithm algorithm, const SolveOptions& options = {});

struct BenchRow {
    std::string instance;
    Algorithm algorithm;
    Rational value;
    double seconds = 0;
};

struct NamedInstance {
    std::string name;
    Instance instance;
};

/// Some algorithms disagree on an instance.
class CrossValidationError : public std::runtime_error {
 public:
    CrossValidationError(const std::string& what, std::vector<BenchRow> rows)
        : std::runtime_error(what), rows_(std::move(rows)) {}
    const std::vector<BenchRow>& rows() const { return rows_; }

 private:
    std::vector<BenchRow> rows_;
};

/// Runs every algorithm on every instance and checks that all values per
/// instance agree exactly; throws CrossValidationError (with the rows
/// gathered so far) otherwise.
std::vector<BenchRow> run_bench(const std::vector<NamedInstance>& instances, const std::vector<Algorithm>& algorithms,
                                const SolveOptions& options = {});

std::string format_bench_text(const std::vector<BenchRow>& rows);
std::string format_bench_kv(const std::vector<BenchRow>& rows);

}  // namespace bqp
