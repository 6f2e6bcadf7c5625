#include "goatopt/baselines.hpp"
#include "tracker.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace goatopt::baselines {

RunResult run_woa(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                  RandomSource& rng) {
    cfg.validate();
    const WoaParams& p = cfg.woa;
    const std::size_t d = space.dim();
    detail::Tracker tracker("woa", objective, rng.seed());

    Population pod = init_population(space, cfg.n, rng);
    for (auto& whale : pod.members) tracker.evaluate(whale);
    tracker.record();

    for (std::size_t t = 0; t < cfg.t_max; ++t) {
        const double a = linear_control(t, cfg.t_max);
        // Spiral parameter l is drawn from [a2, 1] with a2 going from -1 to -2.
        const double a2 = -1.0 - static_cast<double>(t) / static_cast<double>(cfg.t_max);
        const Vector prey = tracker.best().position;

        for (std::size_t i = 0; i < cfg.n; ++i) {
            Vector& x = pod.members[i].position;
            const double A = 2.0 * a * rng.uniform() - a;
            const double C = 2.0 * rng.uniform();
            const double l = (a2 - 1.0) * rng.uniform() + 1.0;
            const bool spiral = rng.uniform() >= p.spiral_prob;

            if (!spiral) {
                // |A| >= 1 searches around a random whale instead of the prey.
                const Vector target = std::abs(A) >= 1.0 ? pod.members[rng.index(cfg.n)].position : prey;
                for (std::size_t k = 0; k < d; ++k) {
                    const double D = std::abs(C * target[k] - x[k]);
                    x[k] = target[k] - A * D;
                }
            } else {
                const double coil = std::exp(p.spiral_b * l) * std::cos(2.0 * std::numbers::pi * l);
                for (std::size_t k = 0; k < d; ++k) {
                    x[k] = std::abs(prey[k] - x[k]) * coil + prey[k];
                }
            }
            for (std::size_t k = 0; k < d; ++k) x[k] = std::clamp(x[k], space.lower()[k], space.upper()[k]);
        }
        for (auto& whale : pod.members) tracker.evaluate(whale);
        tracker.record();
    }
    return tracker.finish();
}

}  // namespace goatopt::baselines
