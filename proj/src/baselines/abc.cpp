#include "goatopt/baselines.hpp"
#include "tracker.hpp"

#include <algorithm>
#include <cmath>

namespace goatopt::baselines {

namespace {

double quality(double f) { return f >= 0.0 ? 1.0 / (1.0 + f) : 1.0 + std::abs(f); }

struct FoodSource {
    Candidate site;
    std::size_t trials = 0;
};

}  // namespace

RunResult run_abc(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                  RandomSource& rng) {
    cfg.validate();
    const std::size_t d = space.dim();
    const std::size_t sources = std::max<std::size_t>(1, cfg.n / 2);
    const std::size_t onlookers = cfg.n - sources;
    const std::size_t limit = cfg.abc.limit > 0 ? cfg.abc.limit : std::max<std::size_t>(1, cfg.n * d / 2);
    detail::Tracker tracker("abc", objective, rng.seed());

    std::vector<FoodSource> food(sources);
    for (auto& s : food) {
        s.site.position = random_position(space, rng);
        tracker.evaluate(s.site);
    }
    tracker.record();

    // One-coordinate move relative to a different random source, kept only if better.
    auto forage = [&](std::size_t i) {
        std::size_t partner = i;
        if (sources > 1) {
            partner = rng.index(sources - 1);
            if (partner >= i) ++partner;
        }
        const std::size_t k = rng.index(d);
        const double phi = rng.uniform(-1.0, 1.0);
        Candidate trial{food[i].site.position, std::nullopt};
        trial.position[k] += phi * (trial.position[k] - food[partner].site.position[k]);
        trial.position[k] = std::clamp(trial.position[k], space.lower()[k], space.upper()[k]);
        const double f = tracker.evaluate(trial);
        if (f < rank_key(food[i].site.fitness)) {
            food[i].site = std::move(trial);
            food[i].trials = 0;
        } else {
            ++food[i].trials;
        }
    };

    std::vector<double> weights(sources);
    for (std::size_t t = 0; t < cfg.t_max; ++t) {
        for (std::size_t i = 0; i < sources; ++i) forage(i);

        double total = 0.0;
        for (std::size_t i = 0; i < sources; ++i) {
            weights[i] = quality(rank_key(food[i].site.fitness));
            total += weights[i];
        }
        for (std::size_t b = 0; b < onlookers; ++b) {
            // Roulette-wheel pick proportional to quality.
            double pick = rng.uniform() * total;
            std::size_t i = 0;
            while (i + 1 < sources && pick >= weights[i]) {
                pick -= weights[i];
                ++i;
            }
            forage(i);
        }

        // At most one scout per cycle: the most exhausted source over the limit.
        auto exhausted = std::max_element(food.begin(), food.end(), [](const FoodSource& a, const FoodSource& b) {
            return a.trials < b.trials;
        });
        if (exhausted->trials > limit) {
            exhausted->site.position = random_position(space, rng);
            tracker.evaluate(exhausted->site);
            exhausted->trials = 0;
        }
        tracker.record();
    }
    return tracker.finish();
}

}  // namespace goatopt::baselines
