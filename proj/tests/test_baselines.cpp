#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goatopt/baselines.hpp"
#include "goatopt/benchmarks.hpp"
#include "goatopt/harness.hpp"

#include <algorithm>

using namespace goatopt;
using namespace goatopt::baselines;

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

BaselineConfig config_for(BaselineKind kind, std::size_t n, std::size_t t_max) {
    BaselineConfig cfg;
    cfg.kind = kind;
    cfg.n = n;
    cfg.t_max = t_max;
    return cfg;
}

}  // namespace

TEST_CASE("kind names round-trip") {
    for (BaselineKind k : all_kinds) CHECK(parse_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_kind("goa"), NotFoundError);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(config_for(BaselineKind::pso, 0, 10).validate(), ValidationError);
    CHECK_THROWS_AS(config_for(BaselineKind::ga, 3, 10).validate(), ValidationError);
    CHECK_NOTHROW(config_for(BaselineKind::ga, 4, 10).validate());
    auto woa = config_for(BaselineKind::woa, 10, 10);
    woa.woa.spiral_prob = 2.0;
    CHECK_THROWS_AS(woa.validate(), ValidationError);
}

TEST_CASE("GWO/WOA control scalar falls linearly from 2 to 0") {
    CHECK(linear_control(0, 500) == 2.0);
    CHECK(linear_control(250, 500) == 1.0);
    CHECK(linear_control(500, 500) == 0.0);
    for (std::size_t t = 1; t <= 500; ++t) {
        REQUIRE(linear_control(t, 500) < linear_control(t - 1, 500));
        REQUIRE(linear_control(t - 1, 500) - linear_control(t, 500) == doctest::Approx(2.0 / 500.0));
    }
}

TEST_CASE("t_max = 0 returns the best initial sample") {
    const auto& spec = benchmarks::lookup("sphere");
    const auto space = spec.space(5);
    for (BaselineKind k : all_kinds) {
        CAPTURE(to_string(k));
        RandomSource rng(9);
        const RunResult r = run_baseline(spec.objective, space, config_for(k, 10, 0), rng);
        CHECK(r.trace.size() == 1);
        CHECK(r.trace[0] == *r.best.fitness);
        CHECK(r.evaluations <= 10u);
    }
}

TEST_CASE("shared run invariants") {
    RandomSource meta(777);
    for (int trial = 0; trial < 60; ++trial) {
        const BaselineKind kind = all_kinds[static_cast<std::size_t>(trial) % all_kinds.size()];
        CAPTURE(to_string(kind));
        const auto& spec = benchmarks::all()[meta.index(6)];
        const auto space = spec.space(2 + meta.index(8));
        const std::size_t n = (kind == BaselineKind::ga ? 4 : 1) + meta.index(20);
        const std::size_t t_max = meta.index(40);
        const std::uint64_t seed = meta.index(1u << 30);

        std::size_t calls = 0;
        bool in_bounds = true;
        const Objective watched{spec.name, [&](std::span<const double> x) {
                                    ++calls;
                                    in_bounds = in_bounds && space.contains(x);
                                    return spec.objective(x);
                                }};
        RandomSource rng(seed);
        const RunResult r = run_baseline(watched, space, config_for(kind, n, t_max), rng);
        REQUIRE(in_bounds);
        REQUIRE(r.evaluations == calls);
        // One scout per ABC cycle at most.
        REQUIRE(r.evaluations <= n * (t_max + 1) + (kind == BaselineKind::abc ? t_max : 0));
        REQUIRE(r.trace.size() == t_max + 1);
        for (std::size_t t = 1; t < r.trace.size(); ++t) REQUIRE(r.trace[t] <= r.trace[t - 1]);
        REQUIRE(r.trace.back() == *r.best.fitness);
        REQUIRE(r.seed == seed);

        RandomSource again(seed);
        const RunResult r2 = run_baseline(spec.objective, space, config_for(kind, n, t_max), again);
        REQUIRE(r2.trace == r.trace);
        REQUIRE(r2.best.position == r.best.position);
        REQUIRE(r2.evaluations == r.evaluations);
    }
}

TEST_CASE("every baseline beats budget-matched random search on sphere") {
    const auto& spec = benchmarks::lookup("sphere");
    const auto space = spec.space(10);
    const std::size_t n = 30, t_max = 200, seeds = 20;

    for (BaselineKind kind : all_kinds) {
        CAPTURE(to_string(kind));
        std::vector<double> algo, random;
        for (std::size_t s = 0; s < seeds; ++s) {
            RandomSource rng(1000 + s);
            const RunResult r = run_baseline(spec.objective, space, config_for(kind, n, t_max), rng);
            algo.push_back(*r.best.fitness);
            // Same number of evaluations, spread over the same number of batches.
            RandomSource rs(5000 + s);
            const std::size_t per_iter = (r.evaluations - n + t_max - 1) / t_max;
            const RunResult base = harness::run_random_search(spec.objective, space, n, t_max, per_iter, rs);
            CHECK(base.evaluations >= r.evaluations);
            random.push_back(*base.best.fitness);
        }
        CHECK(median(algo) < median(random));
    }
}

TEST_CASE("objective failures carry context") {
    const Objective bad{"bad", [](std::span<const double>) -> double { throw std::runtime_error("nope"); }};
    for (BaselineKind kind : all_kinds) {
        RandomSource rng(1);
        CHECK_THROWS_AS(run_baseline(bad, SearchSpace::uniform(2, -1, 1), config_for(kind, 5, 3), rng), RunFailure);
    }
}
