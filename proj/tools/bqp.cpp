#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bqp/dispatch.hpp"
#include "bqp/error.hpp"
#include "bqp/generate.hpp"
#include "bqp/io.hpp"
#include "bqp/rank_one.hpp"
#include "bqp/transform.hpp"

using namespace bqp;

namespace {

enum Exit { ok = 0, failure = 1, refused = 2, parse_failed = 3, cross_failed = 4 };

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// spin files are solved through the 0/1 substitution x = (w + 1) / 2
Instance load_binary(const std::string& path, VariableDomain* domain = nullptr) {
    auto parsed = parse_instance(read_file(path));
    if (domain) *domain = parsed.domain;
    return parsed.domain == VariableDomain::spin ? cut_to_bqp01(parsed.as_cut()) : parsed.terms;
}

std::string signs(const BinaryVector& v) {
    std::string s;
    for (auto b : v) s += b ? '+' : '-';
    return s;
}

std::string opt(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "unknown"; }

void print_report_kv(const AnalysisReport& r) {
    std::cout << "m=" << r.m << "\nn=" << r.n << "\n";
    std::cout << "rank=" << (r.rank ? std::to_string(*r.rank) : "unknown") << "\n";
    std::cout << "additive=" << opt(r.additive) << "\nnonnegative=" << opt(r.nonnegative) << "\n";
    if (r.eliminator) {
        std::cout << "eliminator_size=" << r.eliminator->size() << "\neliminator_rows=";
        for (std::size_t k = 0; k < r.eliminator->rows.size(); ++k)
            std::cout << (k ? "," : "") << r.eliminator->rows[k] + 1;
        std::cout << "\neliminator_cols=";
        for (std::size_t k = 0; k < r.eliminator->cols.size(); ++k)
            std::cout << (k ? "," : "") << r.eliminator->cols[k] + 1;
        std::cout << "\n";
    }
}

void dump_breakpoints(const Instance& inst) {
    auto oriented = normalize_orientation(inst);
    auto form = rank_one_form(oriented.instance);
    if (!form) throw PreconditionError("--dump-breakpoints needs rank(Q) <= 1");
    auto h1 = pkp_breakpoints(*form);
    auto h2 = ulp_breakpoints(*form);
    std::cout << "# h1: lambda h\n";
    for (std::size_t k = 0; k < h1.size(); ++k)
        std::cout << to_string(h1.values[k]) << " " << to_string(h1.heights[k]) << "\n";
    std::cout << "# h2: mu h\n";
    std::cout << to_string(form->lambda_min()) << " " << to_string(ulp_initial_height(*form, h2)) << "\n";
    for (std::size_t k = 0; k < h2.size(); ++k)
        std::cout << to_string(h2.values[k]) << " " << to_string(h2.heights[k]) << "\n";
}

struct SolveArgs {
    std::string file;
    std::string algorithm = "auto";
    std::string format = "text";
    bool dump = false;
    bool no_dual_filter = false;
    bool serial = false;
};

int run_solve(const SolveArgs& args, SolveOptions options) {
    auto alg = parse_algorithm(args.algorithm);
    if (!alg) throw CLI::ValidationError("--algorithm", "unknown algorithm '" + args.algorithm + "'");
    options.dual_filter = !args.no_dual_filter;
    options.execution = args.serial ? Execution::serial : Execution::parallel;
    VariableDomain domain;
    Instance inst = load_binary(args.file, &domain);
    if (args.dump) {
        dump_breakpoints(inst);
        return ok;
    }
    SolveReport rep = dispatch_solve(inst, *alg, options);
    const bool spin = domain == VariableDomain::spin;
    if (args.format == "kv") {
        std::cout << "algorithm=" << algorithm_name(rep.algorithm) << "\nvalue=" << to_string(rep.solution.value)
                  << "\nx=" << (spin ? signs(rep.solution.x) : bits_to_string(rep.solution.x))
                  << "\ny=" << (spin ? signs(rep.solution.y) : bits_to_string(rep.solution.y)) << "\n";
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.6f", rep.seconds);
        std::cout << "time=" << secs << "\n";
        print_report_kv(rep.analysis);
    } else {
        std::cout << "algorithm " << algorithm_name(rep.algorithm) << "\n";
        if (spin)
            std::cout << "value " << to_string(rep.solution.value) << " " << to_decimal(rep.solution.value) << "\nx "
                      << signs(rep.solution.x) << "\ny " << signs(rep.solution.y) << "\n";
        else
            std::cout << format_solution(rep.solution);
        std::printf("time %.6f s\n", rep.seconds);
    }
    return ok;
}

int run_transform(const std::string& file, const std::string& form) {
    const std::string text = read_file(file);
    const std::string header = peek_header(text);
    if (header == "qp01") {
        if (form != "bqp01") throw CLI::ValidationError("--form", "qp01 input converts only to bqp01");
        auto emb = qp01_to_bqp01(parse_qp01(text));
        std::cout << "# penalty " << to_string(emb.big_m) << "\n" << format_instance(emb.instance);
        return ok;
    }
    auto parsed = parse_instance(text);
    if (parsed.domain == VariableDomain::spin) {
        if (form != "bqp01") throw CLI::ValidationError("--form", "bqp11 input converts only to bqp01");
        std::cout << format_instance(cut_to_bqp01(parsed.as_cut()));
        return ok;
    }
    if (form == "homogeneous") {
        auto h = to_homogeneous(parsed.terms);
        std::cout << "# corner " << to_string(h.big_m) << ", value shift " << to_string(parsed.terms.c0() - h.big_m)
                  << "\n"
                  << format_instance(h.instance);
    } else if (form == "cut") {
        std::cout << format_instance(bqp01_to_cut(parsed.terms).terms, VariableDomain::spin);
    } else if (form == "qp01") {
        std::cout << format_qp01(bqp01_to_qp01(parsed.terms));
    } else {
        throw CLI::ValidationError("--form", "bqp01 input converts to homogeneous, cut or qp01");
    }
    return ok;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for bipartite quadratic programs"};
    app.require_subcommand(1);

    SolveOptions options;
    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--m-limit", options.m_limit, "largest m for enumeration");
        sub->add_option("--p-limit", options.p_limit, "largest rank for the fixed-rank solver");
        sub->add_option("--eliminator-limit", options.eliminator_limit, "largest eliminator to branch on");
    };

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
    solve_cmd->add_option("file", solve.file, "instance file ('-' for stdin)")->required();
    solve_cmd->add_option("--algorithm", solve.algorithm, "auto|oracle|enum|rank1|rankp|additive|mincut|eliminator");
    add_limits(solve_cmd);
    solve_cmd->add_flag("--no-dual-filter", solve.no_dual_filter, "rankp: use every basis and every bound split");
    solve_cmd->add_flag("--dump-breakpoints", solve.dump, "print the h1/h2 breakpoint tables of a rank-one instance");
    solve_cmd->add_flag("--serial", solve.serial, "use the serial kernels");
    solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember({"text", "kv"}));

    std::string analyze_file, analyze_format = "text";
    auto* analyze_cmd = app.add_subcommand("analyze", "report structure of Q");
    analyze_cmd->add_option("file", analyze_file)->required();
    analyze_cmd->add_option("--format", analyze_format)->check(CLI::IsMember({"text", "kv"}));

    std::string transform_file, transform_form;
    auto* transform_cmd = app.add_subcommand("transform", "rewrite an instance in another form");
    transform_cmd->add_option("file", transform_file)->required();
    transform_cmd->add_option("--form", transform_form, "homogeneous|cut|qp01 (bqp01 for bqp11/qp01 input)")
        ->required();

    std::string kind = "general";
    std::size_t gen_m = 5, gen_n = 5;
    std::uint64_t seed = 1;
    GeneratorParams params;
    bool no_linear = false;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("--kind", kind, "general|rank<p>|additive|nonnegative|sparse-negative<k>");
    gen_cmd->add_option("--m", gen_m);
    gen_cmd->add_option("--n", gen_n);
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--max-abs", params.max_abs);
    gen_cmd->add_flag("--no-linear", no_linear, "c = d = 0, c0 = 0");

    std::vector<std::string> bench_files;
    std::string bench_algs = "oracle,auto", bench_format = "text";
    bool bench_serial = false;
    auto* bench_cmd = app.add_subcommand("bench", "run several algorithms and cross-check values");
    bench_cmd->add_option("files", bench_files);
    bench_cmd->add_option("--algorithms", bench_algs, "comma-separated list");
    add_limits(bench_cmd);
    bench_cmd->add_flag("--serial", bench_serial);
    bench_cmd->add_option("--format", bench_format)->check(CLI::IsMember({"text", "kv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*solve_cmd) return run_solve(solve, options);
        if (*analyze_cmd) {
            auto report = analyze(load_binary(analyze_file));
            if (analyze_format == "kv")
                print_report_kv(report);
            else
                std::cout << format_report(report);
            return ok;
        }
        if (*transform_cmd) return run_transform(transform_file, transform_form);
        if (*gen_cmd) {
            params.linear_terms = !no_linear;
            std::cout << format_instance(generate_instance(kind, gen_m, gen_n, seed, params));
            return ok;
        }
        if (*bench_cmd) {
            std::vector<Algorithm> algs;
            for (const auto& name : split(bench_algs, ',')) {
                auto a = parse_algorithm(name);
                if (!a) throw CLI::ValidationError("--algorithms", "unknown algorithm '" + name + "'");
                algs.push_back(*a);
            }
            std::vector<NamedInstance> instances;
            for (const auto& f : bench_files) instances.push_back({f, load_binary(f)});
            options.execution = bench_serial ? Execution::serial : Execution::parallel;
            try {
                auto rows = run_bench(instances, algs, options);
                std::cout << (bench_format == "kv" ? format_bench_kv(rows) : format_bench_text(rows));
            } catch (const CrossValidationError& e) {
                std::cout << (bench_format == "kv" ? format_bench_kv(e.rows()) : format_bench_text(e.rows()));
                std::cerr << "error: " << e.what() << "\n";
                return cross_failed;
            }
            return ok;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_failed;
    } catch (const NoSolverError& e) {
        std::cerr << "refused: " << e.what() << "\n" << format_report(e.report());
        return refused;
    } catch (const RefusalError& e) {
        std::cerr << "refused: " << e.what() << " (limit " << e.limit() << ", measured " << e.measured() << ")\n";
        return refused;
    } catch (const PreconditionError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return refused;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return failure;
}
