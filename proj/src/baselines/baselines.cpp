#include "goatopt/baselines.hpp"

#include <cmath>

namespace goatopt::baselines {

std::string_view to_string(BaselineKind k) noexcept {
    switch (k) {
        case BaselineKind::pso: return "pso";
        case BaselineKind::gwo: return "gwo";
        case BaselineKind::ga: return "ga";
        case BaselineKind::woa: return "woa";
        case BaselineKind::abc: return "abc";
    }
    return "unknown";
}

BaselineKind parse_kind(std::string_view name) {
    for (BaselineKind k : all_kinds) {
        if (to_string(k) == name) return k;
    }
    throw NotFoundError("unknown baseline '" + std::string(name) + "'; valid: pso, gwo, ga, woa, abc");
}

void BaselineConfig::validate() const {
    auto require = [this](bool ok, const std::string& what) {
        if (!ok) {
            throw ValidationError("invalid " + std::string(to_string(kind)) + " config: " + what);
        }
    };
    require(n >= 1, "n must be >= 1");
    switch (kind) {
        case BaselineKind::pso:
            require(std::isfinite(pso.inertia), "inertia must be finite");
            require(pso.c1 >= 0.0 && pso.c2 >= 0.0, "c1 and c2 must be >= 0");
            require(pso.velocity_fraction > 0.0, "velocity_fraction must be > 0");
            break;
        case BaselineKind::ga:
            require(n >= 4, "n must be >= 4 for tournament selection");
            require(ga.tournament_size >= 1 && ga.tournament_size <= n, "tournament_size must lie in [1, n]");
            require(ga.crossover_rate >= 0.0 && ga.crossover_rate <= 1.0, "crossover_rate must lie in [0, 1]");
            require(ga.mutation_rate >= 0.0 && ga.mutation_rate <= 1.0, "mutation_rate must lie in [0, 1]");
            require(ga.mutation_scale >= 0.0, "mutation_scale must be >= 0");
            require(ga.elites < n, "elites must be < n");
            break;
        case BaselineKind::woa:
            require(std::isfinite(woa.spiral_b), "spiral_b must be finite");
            require(woa.spiral_prob >= 0.0 && woa.spiral_prob <= 1.0, "spiral_prob must lie in [0, 1]");
            break;
        case BaselineKind::gwo:
        case BaselineKind::abc:
            break;
    }
}

double linear_control(std::size_t t, std::size_t t_max) {
    if (t_max == 0) return 0.0;
    return 2.0 * (1.0 - static_cast<double>(t) / static_cast<double>(t_max));
}

RunResult run_baseline(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                       RandomSource& rng) {
    switch (cfg.kind) {
        case BaselineKind::pso: return run_pso(objective, space, cfg, rng);
        case BaselineKind::gwo: return run_gwo(objective, space, cfg, rng);
        case BaselineKind::ga: return run_ga(objective, space, cfg, rng);
        case BaselineKind::woa: return run_woa(objective, space, cfg, rng);
        case BaselineKind::abc: return run_abc(objective, space, cfg, rng);
    }
    throw ValidationError("unhandled baseline kind");
}

}  // namespace goatopt::baselines
