#include "goatopt/harness.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace goatopt::harness {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// FILE:COLUMN, splitting on the last colon.
std::vector<double> column_from(const std::string& ref) {
    const auto colon = ref.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == ref.size()) {
        throw ValidationError("expected FILE:COLUMN, got '" + ref + "'");
    }
    return read_csv_column(read_file(ref.substr(0, colon)), ref.substr(colon + 1));
}

int cmd_list() {
    std::cout << "functions:\n";
    for (const auto& spec : benchmarks::all()) {
        std::cout << "  " << spec.name << "  [" << format_double(spec.lower) << ", " << format_double(spec.upper)
                  << "]  optimum " << format_double(spec.optimum_value) << "\n";
    }
    std::cout << "algorithms:\n";
    for (const auto& id : algorithm_ids()) std::cout << "  " << id << "\n";
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Goat Optimization Algorithm and baseline benchmark harness"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List benchmark functions and algorithm ids");

    auto* run = app.add_subcommand("run", "Run one algorithm on one function");
    std::string run_algorithm_id = "goa";
    std::string run_function;
    std::size_t run_dim = 30, run_iters = 500, run_pop = 30;
    std::uint64_t run_seed_value = 42;
    std::string run_trace;
    std::string run_acceptance = "greedy";
    run->add_option("--algorithm,-a", run_algorithm_id, "Algorithm id")->capture_default_str();
    run->add_option("--function,-f", run_function, "Benchmark function")->required();
    run->add_option("--dim,-d", run_dim, "Problem dimension")->capture_default_str();
    run->add_option("--iters,-t", run_iters, "Maximum iterations")->capture_default_str();
    run->add_option("--pop,-n", run_pop, "Population size")->capture_default_str();
    run->add_option("--seed,-s", run_seed_value, "Random seed")->capture_default_str();
    run->add_option("--trace", run_trace, "Trace CSV path (default: <output dir>/trace_<alg>_<fn>.csv)");
    run->add_option("--acceptance", run_acceptance, "GOA acceptance rule: greedy or literal")->capture_default_str();

    auto* suite = app.add_subcommand("suite", "Run the full comparison suite");
    std::string config_path;
    ConfigOverrides flags;
    std::vector<std::string> fn_list, alg_list;
    std::size_t dim = 0, runs = 0, pop = 0, iters = 0, threads = 0;
    std::uint64_t seed = 0;
    std::string out_dir;
    suite->add_option("--config,-c", config_path, "JSON config file (run_meta.json also accepted)");
    suite->add_option("--functions", fn_list, "Benchmark functions")->delimiter(',');
    suite->add_option("--algorithms", alg_list, "Algorithm ids")->delimiter(',');
    suite->add_flag("--all-functions", flags.all_functions, "Use all six benchmark functions");
    auto* o_dim = suite->add_option("--dim", dim, "Problem dimension");
    auto* o_runs = suite->add_option("--runs", runs, "Independent runs per cell");
    auto* o_seed = suite->add_option("--seed", seed, "Base seed");
    auto* o_pop = suite->add_option("--pop", pop, "Population size");
    auto* o_iters = suite->add_option("--iters", iters, "Maximum iterations");
    auto* o_threads = suite->add_option("--threads", threads, "Worker threads (0 = all cores)");
    suite->add_option("--output-dir,-o", out_dir, "Output directory (env GOATOPT_OUTPUT_DIR)");

    auto* st = app.add_subcommand("stats", "Wilcoxon rank-sum test on two CSV columns");
    std::string sample_a, sample_b;
    st->add_option("--a", sample_a, "First sample as FILE:COLUMN")->required();
    st->add_option("--b", sample_b, "Second sample as FILE:COLUMN")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (list->parsed()) return cmd_list();

        if (run->parsed()) {
            const auto& spec = benchmarks::lookup(run_function);
            if (!is_algorithm(run_algorithm_id)) {
                std::string valid;
                for (const auto& id : algorithm_ids()) valid += (valid.empty() ? "" : ", ") + id;
                throw NotFoundError("unknown algorithm '" + run_algorithm_id + "'; valid algorithms: " + valid);
            }
            SuiteConfig cfg;
            cfg.functions = {run_function};
            cfg.algorithms = {run_algorithm_id};
            cfg.dim = run_dim;
            cfg.runs = 1;
            cfg.base_seed = run_seed_value;
            cfg.population = run_pop;
            cfg.iterations = run_iters;
            cfg.goa.acceptance = goa::parse_acceptance(run_acceptance);
            cfg.validate();

            RandomSource rng(run_seed_value);
            const RunResult result = run_algorithm(run_algorithm_id, spec.objective, spec.space(run_dim), cfg, rng);

            std::filesystem::path trace_path = run_trace;
            if (trace_path.empty()) {
                const char* env = std::getenv(output_dir_env.data());
                trace_path = std::filesystem::path(env && *env ? env : ".") /
                             ("trace_" + run_algorithm_id + "_" + run_function + ".csv");
            }
            if (trace_path.has_parent_path()) std::filesystem::create_directories(trace_path.parent_path());
            std::ofstream out(trace_path, std::ios::binary);
            out << trace_csv(result);
            if (!out) throw std::runtime_error("cannot write " + trace_path.string());

            std::cout << "best_fitness " << format_double(rank_key(result.best.fitness)) << "\n"
                      << "evaluations " << result.evaluations << "\n"
                      << "termination " << to_string(result.termination) << "\n"
                      << "trace " << trace_path.string() << "\n";
            return 0;
        }

        if (suite->parsed()) {
            if (!fn_list.empty()) flags.functions = fn_list;
            if (!alg_list.empty()) flags.algorithms = alg_list;
            if (o_dim->count()) flags.dim = dim;
            if (o_runs->count()) flags.runs = runs;
            if (o_seed->count()) flags.base_seed = seed;
            if (o_pop->count()) flags.population = pop;
            if (o_iters->count()) flags.iterations = iters;
            if (o_threads->count()) flags.threads = threads;
            if (!out_dir.empty()) flags.output_dir = out_dir;

            std::optional<std::filesystem::path> path;
            if (!config_path.empty()) path = config_path;
            const SuiteConfig cfg = load_config(path, flags);
            const SuiteResults results = run_suite(cfg);
            for (const auto& w : results.warnings) std::cerr << "warning: " << w << "\n";
            for (const auto& p : write_outputs(results, cfg.output_dir)) std::cout << "wrote " << p.string() << "\n";
            std::cout << summary_csv(results);
            return 0;
        }

        if (st->parsed()) {
            const auto a = column_from(sample_a);
            const auto b = column_from(sample_b);
            const auto r = stats::rank_sum_test(a, b);
            std::cout << "n1 " << r.n1 << "\nn2 " << r.n2 << "\nstatistic " << format_double(r.statistic)
                      << "\np_value " << format_double(r.p_value) << "\nmethod " << stats::to_string(r.method)
                      << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace goatopt::harness
