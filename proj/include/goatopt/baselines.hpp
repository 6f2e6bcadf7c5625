#pragma once

#include "goatopt/core.hpp"

#include <array>
#include <string_view>

namespace goatopt::baselines {

enum class BaselineKind { pso, gwo, ga, woa, abc };

inline constexpr std::array<BaselineKind, 5> all_kinds = {
    BaselineKind::pso, BaselineKind::gwo, BaselineKind::ga, BaselineKind::woa, BaselineKind::abc};

std::string_view to_string(BaselineKind k) noexcept;
/// Throws NotFoundError for unknown ids.
BaselineKind parse_kind(std::string_view name);

// Global-best PSO with constriction-equivalent inertia.
struct PsoParams {
    double inertia = 0.729;
    double c1 = 1.49445;
    double c2 = 1.49445;
    double velocity_fraction = 0.2;  // |v_k| <= fraction * (UB_k - LB_k)
};

// Real-coded generational GA.
struct GaParams {
    std::size_t tournament_size = 3;
    double crossover_rate = 0.9;
    double mutation_rate = 0.0;  // per gene; 0 means 1/d
    double mutation_scale = 0.1; // sigma = scale * (UB - LB)
    std::size_t elites = 1;
};

struct WoaParams {
    double spiral_b = 1.0;
    double spiral_prob = 0.5;
};

struct AbcParams {
    std::size_t limit = 0;  // abandonment limit; 0 means n * d / 2
};

struct BaselineConfig {
    BaselineKind kind = BaselineKind::pso;
    std::size_t n = 30;
    std::size_t t_max = 500;
    PsoParams pso;
    GaParams ga;
    WoaParams woa;
    AbcParams abc;

    void validate() const;
};

/// Control scalar shared by GWO and WOA: 2 at t = 0, falling linearly to 0 at t_max.
double linear_control(std::size_t t, std::size_t t_max);

RunResult run_baseline(const Objective& objective, const SearchSpace& space,
                       const BaselineConfig& cfg, RandomSource& rng);

// Individual algorithms; run_baseline dispatches on cfg.kind.
RunResult run_pso(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                  RandomSource& rng);
RunResult run_gwo(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                  RandomSource& rng);
RunResult run_ga(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                 RandomSource& rng);
RunResult run_woa(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                  RandomSource& rng);
RunResult run_abc(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                  RandomSource& rng);

}  // namespace goatopt::baselines
