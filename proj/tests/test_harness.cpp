#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goatopt/harness.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace goatopt;
using namespace goatopt::harness;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("goatopt_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_text(const fs::path& path, const std::string& text) {
    std::ofstream(path) << text;
    return path;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_lines(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

SuiteConfig small_suite() {
    SuiteConfig cfg;
    cfg.dim = 5;
    cfg.runs = 4;
    cfg.population = 10;
    cfg.iterations = 20;
    cfg.threads = 1;
    return cfg;
}

}  // namespace

TEST_CASE("defaults match the reference experiment") {
    const SuiteConfig cfg;
    CHECK(cfg.population == 30);
    CHECK(cfg.iterations == 500);
    CHECK(cfg.dim == 30);
    CHECK(cfg.runs == 30);
    CHECK(cfg.goa.alpha == 0.05);
    CHECK(cfg.goa.beta == 0.5);
    CHECK(cfg.goa.jump_prob == 0.1);
    CHECK(cfg.goa.filter_fraction == 0.2);
    CHECK(cfg.functions == std::vector<std::string>{"sphere", "rastrigin", "ackley"});
    CHECK(cfg.algorithms == algorithm_ids());
    CHECK(algorithm_ids().size() == 6);
}

TEST_CASE("load_config") {
    ::unsetenv(output_dir_env.data());
    const fs::path dir = scratch("config");

    SUBCASE("empty file gives defaults") {
        const SuiteConfig cfg = load_config(write_text(dir / "empty.json", ""));
        CHECK(cfg.population == 30);
        CHECK(cfg.iterations == 500);
        CHECK(cfg.dim == 30);
        CHECK(cfg.runs == 30);
        CHECK(config_to_json(cfg) == config_to_json(SuiteConfig{}));
    }
    SUBCASE("misspelled function lists the valid names") {
        try {
            load_config(write_text(dir / "typo.json", R"({"functions": ["spehre"]})"));
            FAIL("expected NotFoundError");
        } catch (const NotFoundError& e) {
            const std::string msg = e.what();
            for (const auto& name : benchmarks::names()) CHECK(msg.find(name) != std::string::npos);
        }
    }
    SUBCASE("unknown algorithm lists the valid ids") {
        try {
            load_config(write_text(dir / "alg.json", R"({"algorithms": ["goa", "de"]})"));
            FAIL("expected NotFoundError");
        } catch (const NotFoundError& e) {
            CHECK(std::string(e.what()).find("pso") != std::string::npos);
        }
    }
    SUBCASE("flags beat the file") {
        const auto path = write_text(dir / "runs.json", R"({"runs": 5, "dim": 7})");
        ConfigOverrides flags;
        flags.runs = 9;
        const SuiteConfig cfg = load_config(path, flags);
        CHECK(cfg.runs == 9);
        CHECK(cfg.dim == 7);
    }
    SUBCASE("env var beats the file for the output dir, flags beat both") {
        const auto path = write_text(dir / "out.json", R"({"output_dir": "from_file"})");
        ::setenv(output_dir_env.data(), "from_env", 1);
        CHECK(load_config(path).output_dir == "from_env");
        ConfigOverrides flags;
        flags.output_dir = "from_flag";
        CHECK(load_config(path, flags).output_dir == "from_flag");
        ::unsetenv(output_dir_env.data());
        CHECK(load_config(path).output_dir == "from_file");
    }
    SUBCASE("unknown keys are rejected by name") {
        try {
            parse_config(R"({"runs": 3, "itterations": 4})");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("itterations") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_config(R"({"goa": {"gamma": 1}})"), ValidationError);
    }
    SUBCASE("syntax errors report the line") {
        try {
            parse_config("{\n  \"runs\": 3,\n  \"dim\" 4\n}", "bad.json");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("bad.json") != std::string::npos);
            CHECK(msg.find("line 3") != std::string::npos);
        }
    }
    SUBCASE("type errors name the key") {
        try {
            parse_config(R"({"runs": -2})");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("runs") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_config(R"({"goa": {"alpha": "big"}})"), ValidationError);
    }
    SUBCASE("per-algorithm overrides") {
        const SuiteConfig cfg = parse_config(R"({"goa": {"acceptance": "literal", "alpha": 0.1},
                                                 "pso": {"inertia": 0.5}, "abc": {"limit": 7}})");
        CHECK(cfg.goa.acceptance == goa::Acceptance::literal);
        CHECK(cfg.goa.alpha == 0.1);
        CHECK(cfg.pso.inertia == 0.5);
        CHECK(cfg.abc.limit == 7);
    }
    SUBCASE("all-functions flag") {
        ConfigOverrides flags;
        flags.all_functions = true;
        CHECK(load_config(std::nullopt, flags).functions.size() == 6);
    }
    SUBCASE("invalid values are rejected") {
        CHECK_THROWS_AS(parse_config(R"({"runs": 0})").validate(), ValidationError);
        CHECK_THROWS_AS(parse_config(R"({"functions": ["sphere", "sphere"]})").validate(), ValidationError);
        CHECK_THROWS_AS(parse_config(R"({"functions": ["rosenbrock"], "dim": 1})").validate(), ValidationError);
        CHECK_THROWS_AS(parse_config(R"({"goa": {"filter_fraction": 1.5}})").validate(), ValidationError);
    }
}

TEST_CASE("random search") {
    const auto& spec = benchmarks::lookup("sphere");
    RandomSource rng(3);
    const RunResult r = run_random_search(spec.objective, spec.space(3), 10, 5, 12, rng);
    CHECK(r.trace.size() == 6);
    CHECK(r.evaluations == 10 + 5 * 12);
    for (std::size_t t = 1; t < r.trace.size(); ++t) CHECK(r.trace[t] <= r.trace[t - 1]);
    CHECK(matched_per_iteration(SuiteConfig{}) == 36);
}

TEST_CASE("suite structure") {
    SUBCASE("one run per cell gives zero spread") {
        SuiteConfig cfg = small_suite();
        cfg.runs = 1;
        const SuiteResults res = run_suite(cfg);
        REQUIRE(res.summary.size() == 18);
        for (const auto& row : res.summary) CHECK(row.std_dev == 0.0);
    }
    SUBCASE("goa against random search has one comparison") {
        SuiteConfig cfg = small_suite();
        cfg.functions = {"sphere"};
        cfg.algorithms = {"goa", "random_search"};
        const SuiteResults res = run_suite(cfg);
        REQUIRE(res.comparisons.size() == 1);
        CHECK(res.comparisons[0].algorithm_a == "goa");
        CHECK(res.comparisons[0].algorithm_b == "random_search");
    }
    SUBCASE("rows, seeds and traces") {
        const SuiteConfig cfg = small_suite();
        const SuiteResults res = run_suite(cfg);
        CHECK(res.cells.size() == 18);
        CHECK(res.comparisons.size() == 15);
        for (const auto& row : res.summary) CHECK(row.best_fitness <= row.mean_fitness);
        for (const auto& c : res.comparisons) {
            CHECK(c.test.p_value > 0.0);
            CHECK(c.test.p_value <= 1.0);
        }
        for (const auto& cell : res.cells) {
            for (const auto& run : cell.runs) {
                CHECK(run.seed == cfg.base_seed + run.run_index);
                CHECK(run.result.seed == run.seed);
            }
        }
        const auto traces = res.traces();
        CHECK(traces.size() == 18 * cfg.runs * (cfg.iterations + 1));
        for (std::size_t i = 1; i < traces.size(); ++i) {
            if (traces[i].iteration > 0) CHECK(traces[i].best_so_far <= traces[i - 1].best_so_far);
        }
    }
    SUBCASE("seed changes values but not shape") {
        SuiteConfig a = small_suite(), b = small_suite();
        b.base_seed = 1234;
        const auto ra = run_suite(a), rb = run_suite(b);
        CHECK(count_lines(convergence_csv(ra)) == count_lines(convergence_csv(rb)));
        CHECK(count_lines(summary_csv(ra)) == count_lines(summary_csv(rb)));
        CHECK(convergence_csv(ra) != convergence_csv(rb));
    }
    SUBCASE("parallelism does not change outputs") {
        SuiteConfig serial = small_suite(), parallel = small_suite();
        parallel.threads = 7;
        const auto rs = run_suite(serial), rp = run_suite(parallel);
        CHECK(summary_csv(rs) == summary_csv(rp));
        CHECK(convergence_csv(rs) == convergence_csv(rp));
        CHECK(wilcoxon_csv(rs) == wilcoxon_csv(rp));
        CHECK(run_meta_json(rs) == run_meta_json(rp));
    }
    SUBCASE("a failing run is contained") {
        SuiteConfig cfg = small_suite();
        cfg.functions = {"sphere"};
        SuiteHooks hooks;
        hooks.objective_for = [](const benchmarks::BenchmarkSpec& spec) {
            return Objective{spec.name, [](std::span<const double> x) {
                                 // Poisoned region hit by only some runs.
                                 if (x[0] > 99.9) throw std::runtime_error("diverged");
                                 return benchmarks::sphere(x);
                             }};
        };
        const SuiteResults res = run_suite(cfg, hooks);
        std::size_t failed = 0, ok = 0;
        for (const auto& cell : res.cells) {
            for (const auto& run : cell.runs) run.ok ? ++ok : ++failed;
        }
        CHECK(failed > 0);
        CHECK(ok > 0);
        CHECK(res.warnings.size() >= failed);
        CHECK(run_meta_json(res).find("diverged") != std::string::npos);
    }
}

TEST_CASE("output files") {
    const SuiteConfig cfg = small_suite();
    const SuiteResults res = run_suite(cfg);
    const fs::path dir = scratch("outputs");
    const auto written = write_outputs(res, dir);
    CHECK(written.size() == 4);

    const std::string summary = read_text(dir / "summary.csv");
    const std::string wilcoxon = read_text(dir / "wilcoxon.csv");
    const std::string convergence = read_text(dir / "convergence.csv");
    CHECK(summary.rfind("function,algorithm,best_fitness,mean_fitness,std_dev\n", 0) == 0);
    CHECK(wilcoxon.rfind("function,algorithm_a,algorithm_b,statistic,p_value,method\n", 0) == 0);
    CHECK(convergence.rfind("function,algorithm,run,iteration,best_so_far\n", 0) == 0);
    CHECK(count_lines(summary) == 1 + 18);
    CHECK(count_lines(wilcoxon) == 1 + 15);
    CHECK(count_lines(convergence) == 1 + 18 * cfg.runs * (cfg.iterations + 1));

    SUBCASE("17 significant digits round-trip") {
        for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, 5e-324}) CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
        const auto best = read_csv_column(summary, "best_fitness");
        REQUIRE(best.size() == res.summary.size());
        for (std::size_t i = 0; i < best.size(); ++i) CHECK(best[i] == res.summary[i].best_fitness);
    }
    SUBCASE("run_meta.json reproduces the suite") {
        SuiteConfig again = load_config(dir / "run_meta.json");
        again.threads = 3;
        CHECK(config_to_json(again) == config_to_json(cfg));
        const SuiteResults rerun = run_suite(again);
        CHECK(summary_csv(rerun) == summary);
        CHECK(convergence_csv(rerun) == convergence);
        CHECK(run_meta_json(rerun) == read_text(dir / "run_meta.json"));
    }
    SUBCASE("unwritable directory is reported with its path") {
        const fs::path blocker = dir / "file_not_dir";
        write_text(blocker, "x");
        try {
            write_outputs(res, blocker / "sub");
            FAIL("expected an error");
        } catch (const std::exception& e) {
            CHECK(std::string(e.what()).find("file_not_dir") != std::string::npos);
        }
    }
}

TEST_CASE("read_csv_column") {
    const std::string csv = "a,b\n1,2\n3,\n 5 , 6\n";
    CHECK(read_csv_column(csv, "a") == std::vector<double>{1, 3, 5});
    CHECK(read_csv_column(csv, "b") == std::vector<double>{2, 6});
    CHECK_THROWS_AS(read_csv_column(csv, "c"), NotFoundError);
    CHECK_THROWS_AS(read_csv_column("a\nx\n", "a"), ValidationError);
}
