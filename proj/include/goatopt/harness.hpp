#pragma once

#include "goatopt/baselines.hpp"
#include "goatopt/benchmarks.hpp"
#include "goatopt/core.hpp"
#include "goatopt/goa.hpp"
#include "goatopt/stats.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace goatopt::harness {

inline constexpr std::string_view software_version = "1.0.0";
inline constexpr std::string_view output_dir_env = "GOATOPT_OUTPUT_DIR";

/// The six comparison algorithms, GOA first.
const std::vector<std::string>& algorithm_ids();
/// Budget-matched uniform sampler used as a sanity floor. Not one of the six.
inline constexpr std::string_view random_search_id = "random_search";
bool is_algorithm(std::string_view id);

struct SuiteConfig {
    std::vector<std::string> functions = {"sphere", "rastrigin", "ackley"};
    std::vector<std::string> algorithms = {"goa", "pso", "gwo", "ga", "woa", "abc"};
    std::size_t dim = 30;
    std::size_t runs = 30;
    std::uint64_t base_seed = 42;
    std::size_t population = 30;
    std::size_t iterations = 500;
    goa::GoaConfig goa;
    baselines::PsoParams pso;
    baselines::GaParams ga;
    baselines::WoaParams woa;
    baselines::AbcParams abc;
    std::string output_dir = "results";
    // Worker threads for run_suite; 0 picks the hardware concurrency. Not part
    // of the reproducible configuration.
    std::size_t threads = 0;

    /// Throws ValidationError / NotFoundError with the valid options listed.
    void validate() const;
};

/// Flag-level overrides; unset fields leave the lower-precedence value alone.
struct ConfigOverrides {
    std::optional<std::vector<std::string>> functions;
    std::optional<std::vector<std::string>> algorithms;
    std::optional<std::size_t> dim;
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> base_seed;
    std::optional<std::size_t> population;
    std::optional<std::size_t> iterations;
    std::optional<std::string> output_dir;
    std::optional<std::size_t> threads;
    bool all_functions = false;
};

/// Parses JSON config text. An empty document yields the defaults. A
/// run_meta.json document is accepted and its embedded config is used.
SuiteConfig parse_config(std::string_view text, std::string_view origin = "<inline>");

/// Precedence: flags > GOATOPT_OUTPUT_DIR (output dir only) > file > defaults.
SuiteConfig load_config(const std::optional<std::filesystem::path>& path,
                        const ConfigOverrides& flags = {});

/// JSON form of the reproducible part of a config (threads excluded).
std::string config_to_json(const SuiteConfig& cfg);

/// GOA config with the suite's population and iteration count applied.
goa::GoaConfig goa_config(const SuiteConfig& cfg);
baselines::BaselineConfig baseline_config(const SuiteConfig& cfg, baselines::BaselineKind kind);

/// Uniform sampling: n samples up front, then per_iteration samples for each
/// of t_max iterations. The trace has t_max + 1 entries.
RunResult run_random_search(const Objective& objective, const SearchSpace& space, std::size_t n,
                            std::size_t t_max, std::size_t per_iteration, RandomSource& rng);

/// Per-iteration samples that match GOA's default per-iteration evaluations.
std::size_t matched_per_iteration(const SuiteConfig& cfg);

/// Runs one algorithm by id with the suite's parameters.
RunResult run_algorithm(std::string_view id, const Objective& objective, const SearchSpace& space,
                        const SuiteConfig& cfg, RandomSource& rng);

struct SummaryRow {
    std::string function;
    std::string algorithm;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double std_dev = 0.0;
};

struct TraceRecord {
    std::string function;
    std::string algorithm;
    std::size_t run_index = 0;
    std::size_t iteration = 0;
    double best_so_far = 0.0;
};

struct Comparison {
    std::string function;
    std::string algorithm_a;
    std::string algorithm_b;
    stats::RankSumResult test;
};

struct RunRecord {
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    RunResult result;
};

struct Cell {
    std::string function;
    std::string algorithm;
    std::vector<RunRecord> runs;
};

struct SuiteResults {
    SuiteConfig config;
    std::vector<Cell> cells;  // function-major, then algorithm, in config order
    std::vector<SummaryRow> summary;
    std::vector<Comparison> comparisons;
    std::vector<std::string> warnings;

    std::vector<TraceRecord> traces() const;
};

struct SuiteHooks {
    // Lets tests substitute a failing or instrumented objective.
    std::function<Objective(const benchmarks::BenchmarkSpec&)> objective_for;
};

/// Seed of run r: base_seed + r, shared by every function and algorithm.
std::uint64_t run_seed(const SuiteConfig& cfg, std::size_t run_index);

SuiteResults run_suite(const SuiteConfig& cfg, const SuiteHooks& hooks = {});

// File renderers, exposed for tests.
std::string format_double(double v);
std::string summary_csv(const SuiteResults& results);
std::string wilcoxon_csv(const SuiteResults& results);
std::string convergence_csv(const SuiteResults& results);
std::string run_meta_json(const SuiteResults& results);

/// Writes summary.csv, wilcoxon.csv, convergence.csv and run_meta.json.
/// Returns the paths written.
std::vector<std::filesystem::path> write_outputs(const SuiteResults& results,
                                                 const std::filesystem::path& output_dir);

/// Single-run trace CSV: iteration,best_so_far.
std::string trace_csv(const RunResult& result);

/// Reads one named column of numbers from CSV text with a header row.
std::vector<double> read_csv_column(std::string_view text, std::string_view column);

int cli_main(int argc, char** argv);

}  // namespace goatopt::harness
