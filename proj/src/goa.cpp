#include "goatopt/goa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace goatopt::goa {

std::string_view to_string(Acceptance a) noexcept {
    return a == Acceptance::greedy ? "greedy" : "literal";
}

Acceptance parse_acceptance(std::string_view name) {
    if (name == "greedy") return Acceptance::greedy;
    if (name == "literal") return Acceptance::literal;
    throw ValidationError("acceptance must be 'greedy' or 'literal', got '" + std::string(name) + "'");
}

void GoaConfig::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ValidationError(std::string("invalid GOA config: ") + what);
    };
    require(n >= 1, "n must be >= 1");
    require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be >= 0");
    require(std::isfinite(beta) && beta >= 0.0, "beta must be >= 0");
    require(jump_prob >= 0.0 && jump_prob <= 1.0, "jump_prob must lie in [0, 1]");
    require(std::isfinite(jump_mag) && jump_mag >= 0.0, "jump_mag must be >= 0");
    require(filter_fraction >= 0.0 && filter_fraction < 1.0, "filter_fraction must lie in [0, 1)");
    require(epsilon >= 0.0, "epsilon must be >= 0");
    require(delta >= 0.0, "delta must be >= 0");
}

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw ValidationError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

Vector explore_step(std::span<const double> position, const SearchSpace& space, double alpha_t,
                    std::span<const double> noise) {
    require_same_dim(position.size(), space.dim());
    require_same_dim(noise.size(), space.dim());
    Vector out(position.begin(), position.end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] += alpha_t * noise[k] * space.width(k);
    }
    return out;
}

Vector explore_step(std::span<const double> position, const SearchSpace& space, double alpha_t,
                    RandomSource& rng) {
    Vector noise(space.dim());
    for (auto& r : noise) r = rng.normal();
    return explore_step(position, space, alpha_t, noise);
}

Vector exploit_step(std::span<const double> position, std::span<const double> best, double beta) {
    require_same_dim(position.size(), best.size());
    Vector out(position.begin(), position.end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] += beta * (best[k] - out[k]);
    }
    return out;
}

Vector jump_step(std::span<const double> position, std::span<const double> partner, double jump_mag) {
    require_same_dim(position.size(), partner.size());
    Vector out(position.begin(), position.end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] += jump_mag * (partner[k] - out[k]);
    }
    return out;
}

std::size_t filter_count(std::size_t n, double fraction) {
    if (!(fraction >= 0.0 && fraction < 1.0)) {
        throw ValidationError("filter fraction must lie in [0, 1)");
    }
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n)));
}

std::vector<std::size_t> filter_worst(Population& pop, const SearchSpace& space, double fraction,
                                      RandomSource& rng, const Objective& objective) {
    const std::size_t k = filter_count(pop.size(), fraction);
    if (k == 0) return {};
    for (const auto& m : pop.members) {
        if (!m.evaluated()) throw ValidationError("filter_worst requires an evaluated population");
    }

    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Worst first; among equal fitness the higher index goes first.
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double fa = rank_key(pop.members[a].fitness);
        const double fb = rank_key(pop.members[b].fitness);
        if (fa != fb) return fa > fb;
        return a > b;
    });
    order.resize(k);
    std::sort(order.begin(), order.end());

    for (std::size_t i : order) {
        Candidate& c = pop.members[i];
        c.position = random_position(space, rng);
        evaluate_candidate(c, objective);
    }
    for (std::size_t i : order) offer_best(pop, pop.members[i]);
    return order;
}

double fitness_spread(const Population& pop) {
    if (!pop.best_ever || pop.members.empty()) return std::numeric_limits<double>::infinity();
    const double best = rank_key(pop.best_ever->fitness);
    double sum = 0.0;
    for (const auto& m : pop.members) {
        const double gap = rank_key(m.fitness) - best;
        sum += gap * gap;
    }
    return sum / static_cast<double>(pop.members.size());
}

std::optional<Termination> should_stop(std::span<const double> trace, const Population& pop,
                                       const GoaConfig& cfg, std::size_t t) {
    if (t >= cfg.t_max) return Termination::max_iterations;
    if (cfg.epsilon > 0.0 && trace.size() >= 2) {
        const double gain = std::abs(trace[trace.size() - 1] - trace[trace.size() - 2]);
        if (gain < cfg.epsilon) return Termination::stalled_improvement;
    }
    if (cfg.delta > 0.0 && fitness_spread(pop) < cfg.delta) {
        return Termination::negligible_spread;
    }
    return std::nullopt;
}

double alpha_at(const GoaConfig& cfg, std::size_t t) {
    if (!cfg.alpha_decay || cfg.t_max == 0) return cfg.alpha;
    return cfg.alpha * (1.0 - static_cast<double>(t) / static_cast<double>(cfg.t_max));
}

std::size_t move_population(Population& pop, const SearchSpace& space, const GoaConfig& cfg,
                            std::size_t t, RandomSource& rng, const Objective& objective) {
    if (!pop.best_ever) throw ValidationError("move_population requires an evaluated population");
    const std::vector<Candidate> previous = pop.members;
    const Vector leader = pop.best_ever->position;
    const double alpha_t = alpha_at(cfg, t);

    for (std::size_t i = 0; i < pop.size(); ++i) {
        Vector x = explore_step(previous[i].position, space, alpha_t, rng);
        x = exploit_step(x, leader, cfg.beta);
        if (pop.size() > 1 && rng.bernoulli(cfg.jump_prob)) {
            // Uniform over the other N - 1 members.
            std::size_t r = rng.index(pop.size() - 1);
            if (r >= i) ++r;
            x = jump_step(x, previous[r].position, cfg.jump_mag);
        }
        pop.members[i].position = clamp(x, space);
        pop.members[i].fitness.reset();
    }

    for (auto& m : pop.members) evaluate_candidate(m, objective);
    if (cfg.acceptance == Acceptance::greedy) {
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (rank_key(pop.members[i].fitness) > rank_key(previous[i].fitness)) pop.members[i] = previous[i];
        }
    }
    for (const auto& m : pop.members) offer_best(pop, m);
    return pop.size();
}

RunResult run_goa(const Objective& objective, const SearchSpace& space, const GoaConfig& cfg,
                  RandomSource& rng) {
    cfg.validate();

    RunResult result;
    result.seed = rng.seed();

    Population pop = init_population(space, cfg.n, rng);
    result.evaluations += with_run_context("goa", objective, 0, [&] { return evaluate(pop, objective); });
    result.trace.push_back(rank_key(pop.best_ever->fitness));

    std::optional<Termination> stop = should_stop(result.trace, pop, cfg, 0);
    for (std::size_t t = 0; !stop; ++t) {
        with_run_context("goa", objective, t + 1, [&] {
            result.evaluations += move_population(pop, space, cfg, t, rng, objective);
            result.evaluations += filter_worst(pop, space, cfg.filter_fraction, rng, objective).size();
        });
        result.trace.push_back(rank_key(pop.best_ever->fitness));
        stop = should_stop(result.trace, pop, cfg, t + 1);
    }

    result.best = *pop.best_ever;
    result.termination = *stop;
    return result;
}

}  // namespace goatopt::goa
