#include "goatopt/baselines.hpp"
#include "tracker.hpp"

#include <algorithm>
#include <numeric>

namespace goatopt::baselines {

namespace {

std::size_t tournament(const std::vector<Candidate>& pop, std::size_t size, RandomSource& rng) {
    std::size_t winner = rng.index(pop.size());
    for (std::size_t j = 1; j < size; ++j) {
        const std::size_t challenger = rng.index(pop.size());
        if (rank_key(pop[challenger].fitness) < rank_key(pop[winner].fitness)) winner = challenger;
    }
    return winner;
}

}  // namespace

RunResult run_ga(const Objective& objective, const SearchSpace& space, const BaselineConfig& cfg,
                 RandomSource& rng) {
    cfg.validate();
    const GaParams& p = cfg.ga;
    const std::size_t d = space.dim();
    const double mutation_rate = p.mutation_rate > 0.0 ? p.mutation_rate : 1.0 / static_cast<double>(d);
    detail::Tracker tracker("ga", objective, rng.seed());

    Population pop = init_population(space, cfg.n, rng);
    for (auto& c : pop.members) tracker.evaluate(c);
    tracker.record();

    std::vector<Candidate> next;
    next.reserve(cfg.n);
    std::vector<std::size_t> order(cfg.n);
    for (std::size_t t = 0; t < cfg.t_max; ++t) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return rank_key(pop.members[a].fitness) < rank_key(pop.members[b].fitness);
        });
        next.clear();
        for (std::size_t e = 0; e < p.elites; ++e) next.push_back(pop.members[order[e]]);

        const std::size_t first_child = next.size();
        while (next.size() < cfg.n) {
            const Vector& mother = pop.members[tournament(pop.members, p.tournament_size, rng)].position;
            const Vector& father = pop.members[tournament(pop.members, p.tournament_size, rng)].position;
            Vector child1 = mother;
            Vector child2 = father;
            if (rng.bernoulli(p.crossover_rate)) {
                const double lambda = rng.uniform();
                for (std::size_t k = 0; k < d; ++k) {
                    child1[k] = lambda * mother[k] + (1.0 - lambda) * father[k];
                    child2[k] = (1.0 - lambda) * mother[k] + lambda * father[k];
                }
            }
            for (Vector* child : {&child1, &child2}) {
                if (next.size() == cfg.n) break;
                for (std::size_t k = 0; k < d; ++k) {
                    if (rng.bernoulli(mutation_rate)) {
                        (*child)[k] += p.mutation_scale * space.width(k) * rng.normal();
                    }
                }
                next.push_back(Candidate{clamp(*child, space), std::nullopt});
            }
        }
        for (std::size_t i = first_child; i < next.size(); ++i) tracker.evaluate(next[i]);
        pop.members.swap(next);
        tracker.record();
    }
    return tracker.finish();
}

}  // namespace goatopt::baselines
