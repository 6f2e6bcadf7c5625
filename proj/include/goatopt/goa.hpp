#pragma once

#include "goatopt/core.hpp"

#include <optional>
#include <span>

namespace goatopt::goa {

enum class Acceptance {
    literal,  // every composite move is kept
    greedy,   // a goat reverts if its move made it worse
};

std::string_view to_string(Acceptance a) noexcept;
Acceptance parse_acceptance(std::string_view name);

struct GoaConfig {
    std::size_t n = 30;
    std::size_t t_max = 500;
    double alpha = 0.05;
    double beta = 0.5;
    double jump_prob = 0.1;
    double jump_mag = 1.0;
    double filter_fraction = 0.2;
    double epsilon = 0.0;  // 0 disables the stalled-improvement stop
    double delta = 0.0;    // 0 disables the negligible-spread stop
    Acceptance acceptance = Acceptance::greedy;
    bool alpha_decay = false;

    /// Throws ValidationError naming the first offending field.
    void validate() const;
};

// Single-goat moves. None of them clamp or evaluate.

/// x + alpha_t * noise .* (UB - LB), with noise supplied by the caller.
Vector explore_step(std::span<const double> position, const SearchSpace& space,
                    double alpha_t, std::span<const double> noise);
/// Same, drawing one standard normal per dimension from rng.
Vector explore_step(std::span<const double> position, const SearchSpace& space,
                    double alpha_t, RandomSource& rng);

/// x + beta * (best - x)
Vector exploit_step(std::span<const double> position, std::span<const double> best, double beta);

/// x + jump_mag * (partner - x)
Vector jump_step(std::span<const double> position, std::span<const double> partner,
                 double jump_mag);

/// Exploration coefficient used at iteration t (0-based).
double alpha_at(const GoaConfig& cfg, std::size_t t);

/// One move phase: every goat, in index order, explores, is pulled toward
/// the archived best, and with probability jump_prob jumps toward a random
/// other goat's pre-move position. The moved population is clamped and
/// evaluated once, the acceptance rule applied and the archive updated.
/// Returns the number of evaluations.
std::size_t move_population(Population& pop, const SearchSpace& space, const GoaConfig& cfg,
                            std::size_t t, RandomSource& rng, const Objective& objective);

/// Number of members regenerated by filter_worst.
std::size_t filter_count(std::size_t n, double fraction);

/// Replaces the floor(fraction * N) worst members with fresh uniform samples,
/// evaluates them and offers them to the archive. Ties at the cut go to the
/// higher index. Returns the replaced indices in ascending order.
std::vector<std::size_t> filter_worst(Population& pop, const SearchSpace& space, double fraction,
                                      RandomSource& rng, const Objective& objective);

/// Mean squared gap between member fitness and the archived best.
double fitness_spread(const Population& pop);

/// Termination decision after iteration t, or nullopt to continue.
std::optional<Termination> should_stop(std::span<const double> trace, const Population& pop,
                                       const GoaConfig& cfg, std::size_t t);

RunResult run_goa(const Objective& objective, const SearchSpace& space, const GoaConfig& cfg,
                  RandomSource& rng);

}  // namespace goatopt::goa
