#include "goatopt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace goatopt::harness {

RunResult run_random_search(const Objective& objective, const SearchSpace& space, std::size_t n,
                            std::size_t t_max, std::size_t per_iteration, RandomSource& rng) {
    if (n == 0) throw ValidationError("random search needs n >= 1");
    RunResult result;
    result.seed = rng.seed();
    Candidate best;
    auto sample_batch = [&](std::size_t count, std::size_t iteration) {
        with_run_context(random_search_id, objective, iteration, [&] {
            for (std::size_t s = 0; s < count; ++s) {
                Candidate c{random_position(space, rng), std::nullopt};
                evaluate_candidate(c, objective);
                ++result.evaluations;
                if (!best.evaluated() || rank_key(c.fitness) < rank_key(best.fitness)) best = std::move(c);
            }
        });
        result.trace.push_back(rank_key(best.fitness));
    };
    sample_batch(n, 0);
    for (std::size_t t = 0; t < t_max; ++t) sample_batch(per_iteration, t + 1);
    result.best = std::move(best);
    return result;
}

std::size_t matched_per_iteration(const SuiteConfig& cfg) {
    return cfg.population + goa::filter_count(cfg.population, cfg.goa.filter_fraction);
}

RunResult run_algorithm(std::string_view id, const Objective& objective, const SearchSpace& space,
                        const SuiteConfig& cfg, RandomSource& rng) {
    if (id == "goa") return goa::run_goa(objective, space, goa_config(cfg), rng);
    if (id == random_search_id) {
        return run_random_search(objective, space, cfg.population, cfg.iterations, matched_per_iteration(cfg),
                                 rng);
    }
    return baselines::run_baseline(objective, space, baseline_config(cfg, baselines::parse_kind(id)), rng);
}

std::uint64_t run_seed(const SuiteConfig& cfg, std::size_t run_index) {
    return cfg.base_seed + static_cast<std::uint64_t>(run_index);
}

std::vector<TraceRecord> SuiteResults::traces() const {
    std::vector<TraceRecord> out;
    for (const Cell& cell : cells) {
        for (const RunRecord& run : cell.runs) {
            if (!run.ok) continue;
            for (std::size_t t = 0; t < run.result.trace.size(); ++t) {
                out.push_back({cell.function, cell.algorithm, run.run_index, t, run.result.trace[t]});
            }
        }
    }
    return out;
}

namespace {

std::vector<double> final_values(const Cell& cell) {
    std::vector<double> v;
    for (const auto& run : cell.runs) {
        if (run.ok) v.push_back(rank_key(run.result.best.fitness));
    }
    return v;
}

}  // namespace

SuiteResults run_suite(const SuiteConfig& cfg, const SuiteHooks& hooks) {
    cfg.validate();
    SuiteResults results;
    results.config = cfg;

    struct Task {
        std::size_t cell;
        std::size_t run;
    };
    std::vector<Task> tasks;
    std::vector<Objective> objectives;
    std::vector<SearchSpace> spaces;
    for (const auto& fn : cfg.functions) {
        const auto& spec = benchmarks::lookup(fn);
        objectives.push_back(hooks.objective_for ? hooks.objective_for(spec) : spec.objective);
        spaces.push_back(spec.space(cfg.dim));
        for (const auto& alg : cfg.algorithms) {
            Cell cell{fn, alg, std::vector<RunRecord>(cfg.runs)};
            for (std::size_t r = 0; r < cfg.runs; ++r) {
                cell.runs[r].run_index = r;
                cell.runs[r].seed = run_seed(cfg, r);
                tasks.push_back({results.cells.size(), r});
            }
            results.cells.push_back(std::move(cell));
        }
    }

    // Each task writes only its own pre-allocated slot, so the outcome does
    // not depend on scheduling.
    auto execute = [&](const Task& task) {
        Cell& cell = results.cells[task.cell];
        RunRecord& rec = cell.runs[task.run];
        const std::size_t fi = task.cell / cfg.algorithms.size();
        RandomSource rng(rec.seed);
        try {
            rec.result = run_algorithm(cell.algorithm, objectives[fi], spaces[fi], cfg, rng);
            rec.ok = true;
        } catch (const std::exception& e) {
            rec.ok = false;
            rec.error = e.what();
        }
    };

    std::size_t workers = cfg.threads > 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, tasks.size());
    if (workers <= 1) {
        for (const Task& t : tasks) execute(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) execute(tasks[i]);
            });
        }
    }

    for (const Cell& cell : results.cells) {
        for (const RunRecord& run : cell.runs) {
            if (!run.ok) {
                results.warnings.push_back("run " + std::to_string(run.run_index) + " of " + cell.algorithm +
                                           " on " + cell.function + " failed and is excluded: " + run.error);
            }
        }
        const std::vector<double> finals = final_values(cell);
        if (finals.empty()) {
            results.warnings.push_back("no successful runs for " + cell.algorithm + " on " + cell.function +
                                       "; summary row omitted");
            continue;
        }
        const stats::SampleSummary s = stats::summarize(finals);
        results.summary.push_back({cell.function, cell.algorithm, s.best, s.mean, s.std});
    }

    const std::string reference =
        std::find(cfg.algorithms.begin(), cfg.algorithms.end(), "goa") != cfg.algorithms.end()
            ? "goa"
            : cfg.algorithms.front();
    for (std::size_t fi = 0; fi < cfg.functions.size(); ++fi) {
        const std::size_t base = fi * cfg.algorithms.size();
        const auto ref_it = std::find(cfg.algorithms.begin(), cfg.algorithms.end(), reference);
        const std::vector<double> ref_values =
            final_values(results.cells[base + static_cast<std::size_t>(ref_it - cfg.algorithms.begin())]);
        for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
            if (cfg.algorithms[ai] == reference) continue;
            const std::vector<double> other = final_values(results.cells[base + ai]);
            if (ref_values.empty() || other.empty()) {
                results.warnings.push_back("rank-sum test " + reference + " vs " + cfg.algorithms[ai] + " on " +
                                           cfg.functions[fi] + " skipped: no successful runs");
                continue;
            }
            results.comparisons.push_back(
                {cfg.functions[fi], reference, cfg.algorithms[ai], stats::rank_sum_test(ref_values, other)});
        }
    }
    return results;
}

}  // namespace goatopt::harness
