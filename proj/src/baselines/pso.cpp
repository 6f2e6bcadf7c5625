#include "goatopt/baselines.hpp"
#include "tracker.hpp"

#include <algorithm>

namespace goatopt::baselines {

RunResult run_pso(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                  RandomSource& rng) {
    cfg.validate();
    const PsoParams& p = cfg.pso;
    const std::size_t d = space.dim();
    detail::Tracker tracker("pso", objective, rng.seed());

    Vector vmax(d);
    for (std::size_t k = 0; k < d; ++k) vmax[k] = p.velocity_fraction * space.width(k);

    Population swarm = init_population(space, cfg.n, rng);
    std::vector<Vector> velocity(cfg.n, Vector(d, 0.0));
    std::vector<Candidate> personal(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) {
        tracker.evaluate(swarm.members[i]);
        personal[i] = swarm.members[i];
    }
    tracker.record();

    for (std::size_t t = 0; t < cfg.t_max; ++t) {
        const Vector global = tracker.best().position;
        for (std::size_t i = 0; i < cfg.n; ++i) {
            Vector& x = swarm.members[i].position;
            Vector& v = velocity[i];
            for (std::size_t k = 0; k < d; ++k) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                v[k] = p.inertia * v[k] + p.c1 * r1 * (personal[i].position[k] - x[k]) +
                       p.c2 * r2 * (global[k] - x[k]);
                v[k] = std::clamp(v[k], -vmax[k], vmax[k]);
                x[k] = std::clamp(x[k] + v[k], space.lower()[k], space.upper()[k]);
            }
            const double f = tracker.evaluate(swarm.members[i]);
            if (f < rank_key(personal[i].fitness)) personal[i] = swarm.members[i];
        }
        tracker.record();
    }
    return tracker.finish();
}

}  // namespace goatopt::baselines
