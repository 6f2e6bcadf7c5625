#include "goatopt/baselines.hpp"
#include "tracker.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace goatopt::baselines {

namespace {

// Keeps the three best wolves seen so far, best first.
void update_leaders(std::array<Candidate, 3>& leaders, const Candidate& wolf) {
    const double f = rank_key(wolf.fitness);
    for (std::size_t slot = 0; slot < leaders.size(); ++slot) {
        if (f < rank_key(leaders[slot].fitness)) {
            for (std::size_t j = leaders.size() - 1; j > slot; --j) leaders[j] = leaders[j - 1];
            leaders[slot] = wolf;
            return;
        }
    }
}

}  // namespace

RunResult run_gwo(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                  RandomSource& rng) {
    cfg.validate();
    const std::size_t d = space.dim();
    detail::Tracker tracker("gwo", objective, rng.seed());

    Population pack = init_population(space, cfg.n, rng);
    std::array<Candidate, 3> leaders;
    for (auto& wolf : pack.members) {
        tracker.evaluate(wolf);
        update_leaders(leaders, wolf);
    }
    tracker.record();

    for (std::size_t t = 0; t < cfg.t_max; ++t) {
        const double a = linear_control(t, cfg.t_max);
        // With fewer than three wolves the missing leaders fall back to alpha.
        std::array<const Vector*, 3> guide;
        for (std::size_t j = 0; j < 3; ++j) {
            guide[j] = leaders[j].evaluated() ? &leaders[j].position : &leaders[0].position;
        }
        std::array<Vector, 3> guides = {*guide[0], *guide[1], *guide[2]};

        for (auto& wolf : pack.members) {
            Vector& x = wolf.position;
            for (std::size_t k = 0; k < d; ++k) {
                double sum = 0.0;
                for (const Vector& leader : guides) {
                    const double A = 2.0 * a * rng.uniform() - a;
                    const double C = 2.0 * rng.uniform();
                    const double D = std::abs(C * leader[k] - x[k]);
                    sum += leader[k] - A * D;
                }
                x[k] = std::clamp(sum / 3.0, space.lower()[k], space.upper()[k]);
            }
        }
        for (auto& wolf : pack.members) {
            tracker.evaluate(wolf);
            update_leaders(leaders, wolf);
        }
        tracker.record();
    }
    return tracker.finish();
}

}  // namespace goatopt::baselines
