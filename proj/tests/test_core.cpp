#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goatopt/benchmarks.hpp"
#include "goatopt/core.hpp"

#include <cmath>

using namespace goatopt;

TEST_CASE("search space validation") {
    CHECK_THROWS_AS(SearchSpace({}, {}), ValidationError);
    CHECK_THROWS_AS(SearchSpace({1.0}, {0.0}), ValidationError);
    CHECK_THROWS_AS(SearchSpace({0.0, 0.0}, {1.0}), ValidationError);
    CHECK_NOTHROW(SearchSpace({3.0}, {3.0}));
}

TEST_CASE("random source is reproducible and interleaves deterministically") {
    RandomSource a(42), b(42);
    for (int i = 0; i < 200; ++i) {
        switch (i % 3) {
            case 0: CHECK(a.uniform() == b.uniform()); break;
            case 1: CHECK(a.normal() == b.normal()); break;
            default: CHECK(a.index(17) == b.index(17)); break;
        }
    }
    RandomSource c(43);
    RandomSource d(42);
    CHECK(c.uniform() != d.uniform());
}

TEST_CASE("random source ranges") {
    RandomSource rng(1);
    double sum = 0.0, sq = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        REQUIRE(rng.index(5) < 5u);
        const double z = rng.normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / n) < 0.05);
    CHECK(std::abs(sq / n - 1.0) < 0.05);
    CHECK_THROWS_AS(rng.index(0), ValidationError);
}

TEST_CASE("derived streams differ from the parent and each other") {
    RandomSource root(7);
    RandomSource s1 = root.derive(1), s2 = root.derive(2), s1b = root.derive(1);
    CHECK(s1.seed() != s2.seed());
    CHECK(s1.seed() == s1b.seed());
}

TEST_CASE("init_population") {
    SUBCASE("zero-width bounds pin every member") {
        RandomSource rng(3);
        const auto pop = init_population(SearchSpace({3.0, 3.0}, {3.0, 3.0}), 5, rng);
        REQUIRE(pop.size() == 5);
        for (const auto& m : pop.members) {
            CHECK(m.position == Vector{3.0, 3.0});
            CHECK_FALSE(m.evaluated());
        }
        CHECK_FALSE(pop.best_ever.has_value());
    }
    SUBCASE("default sphere box, N = 30") {
        RandomSource rng(11);
        const auto space = SearchSpace::uniform(30, -100.0, 100.0);
        const auto pop = init_population(space, 30, rng);
        REQUIRE(pop.size() == 30);
        for (const auto& m : pop.members) {
            REQUIRE(m.position.size() == 30);
            for (double v : m.position) {
                CHECK(v >= -100.0);
                CHECK(v < 100.0);
            }
        }
    }
    SUBCASE("same seed gives identical positions") {
        const auto space = SearchSpace::uniform(4, -1.0, 1.0);
        RandomSource r1(42), r2(42);
        const auto p1 = init_population(space, 6, r1);
        const auto p2 = init_population(space, 6, r2);
        for (std::size_t i = 0; i < 6; ++i) CHECK(p1.members[i].position == p2.members[i].position);
    }
    SUBCASE("n = 0 is rejected") {
        RandomSource rng(1);
        CHECK_THROWS_AS(init_population(SearchSpace::uniform(2, 0, 1), 0, rng), ValidationError);
    }
}

TEST_CASE("clamp") {
    const auto box = SearchSpace::uniform(2, -100.0, 100.0);
    CHECK(clamp(Vector{150.0, -150.0}, box) == Vector{100.0, -100.0});
    CHECK(clamp(Vector{5.0, 5.0}, box) == Vector{5.0, 5.0});
    CHECK_THROWS_AS(clamp(Vector{1.0}, box), ValidationError);

    RandomSource rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vector x{rng.uniform(-300.0, 300.0), rng.uniform(-300.0, 300.0)};
        const Vector once = clamp(x, box);
        REQUIRE(clamp(once, box) == once);
        REQUIRE(box.contains(once));
        if (box.contains(x)) REQUIRE(once == x);
    }
}

TEST_CASE("evaluate and the elitist archive") {
    const Objective sphere{"sphere", benchmarks::sphere};

    SUBCASE("single candidate at the origin") {
        Population pop;
        pop.members.push_back({Vector(3, 0.0), std::nullopt});
        CHECK(evaluate(pop, sphere) == 1u);
        REQUIRE(pop.best_ever);
        CHECK(*pop.best_ever->fitness == 0.0);
    }
    SUBCASE("ties go to the lower index") {
        Population pop;
        pop.members.push_back({Vector{1.0, 0.0}, std::nullopt});
        pop.members.push_back({Vector{0.0, 1.0}, std::nullopt});
        evaluate(pop, sphere);
        CHECK(pop.best_ever->position == Vector{1.0, 0.0});
    }
    SUBCASE("an earlier equal-fitness archive entry is kept") {
        Population pop;
        pop.members.push_back({Vector{1.0, 0.0}, std::nullopt});
        evaluate(pop, sphere);
        pop.members[0].position = {0.0, -1.0};
        evaluate(pop, sphere);
        CHECK(pop.best_ever->position == Vector{1.0, 0.0});
    }
    SUBCASE("non-finite fitness ranks last") {
        const Objective nasty{"nasty", [](std::span<const double> x) {
                                  return x[0] < 0.0 ? std::nan("") : x[0];
                              }};
        Population pop;
        pop.members.push_back({Vector{-1.0}, std::nullopt});
        pop.members.push_back({Vector{5.0}, std::nullopt});
        evaluate(pop, nasty);
        CHECK(std::isinf(*pop.members[0].fitness));
        CHECK(pop.best_ever->position == Vector{5.0});
    }
    SUBCASE("property: archive bounds the population and never worsens") {
        RandomSource rng(2024);
        const auto space = SearchSpace::uniform(3, -10.0, 10.0);
        for (int trial = 0; trial < 200; ++trial) {
            Population pop = init_population(space, 1 + rng.index(12), rng);
            double previous = std::numeric_limits<double>::infinity();
            for (int round = 0; round < 3; ++round) {
                for (auto& m : pop.members) m.position = random_position(space, rng);
                evaluate(pop, sphere);
                for (const auto& m : pop.members) REQUIRE(*pop.best_ever->fitness <= *m.fitness);
                REQUIRE(*pop.best_ever->fitness <= previous);
                previous = *pop.best_ever->fitness;
            }
        }
    }
}
