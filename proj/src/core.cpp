#include "goatopt/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace goatopt {

SearchSpace::SearchSpace(Vector lower, Vector upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) {
        throw ValidationError("search space must have dimension >= 1");
    }
    if (lower_.size() != upper_.size()) {
        throw ValidationError("lower and upper bounds differ in length");
    }
    for (std::size_t k = 0; k < lower_.size(); ++k) {
        if (!std::isfinite(lower_[k]) || !std::isfinite(upper_[k])) {
            throw ValidationError("bounds must be finite (axis " + std::to_string(k) + ")");
        }
        if (lower_[k] > upper_[k]) {
            throw ValidationError("lower bound exceeds upper bound on axis " + std::to_string(k));
        }
    }
}

SearchSpace SearchSpace::uniform(std::size_t dim, double lower, double upper) {
    return SearchSpace(Vector(dim, lower), Vector(dim, upper));
}

bool SearchSpace::contains(std::span<const double> x) const noexcept {
    if (x.size() != dim()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(x[k] >= lower_[k] && x[k] <= upper_[k])) return false;
    }
    return true;
}

std::string_view to_string(Termination t) noexcept {
    switch (t) {
        case Termination::max_iterations: return "max_iterations";
        case Termination::stalled_improvement: return "stalled_improvement";
        case Termination::negligible_spread: return "negligible_spread";
    }
    return "unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double RandomSource::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double RandomSource::normal() {
    // 1 - u lies in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t RandomSource::index(std::size_t n) {
    if (n == 0) throw ValidationError("index range must be non-empty");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    // Rejection sampling keeps the result unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return static_cast<std::size_t>(r % bound);
}

RandomSource RandomSource::derive(std::uint64_t stream) const {
    return RandomSource(splitmix64(seed_ ^ splitmix64(stream)));
}

Vector random_position(const SearchSpace& space, RandomSource& rng) {
    Vector x(space.dim());
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = space.lower()[k] + space.width(k) * rng.uniform();
    }
    return x;
}

Population init_population(const SearchSpace& space, std::size_t n, RandomSource& rng) {
    if (n == 0) throw ValidationError("population size must be >= 1");
    Population pop;
    pop.members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        pop.members.push_back(Candidate{random_position(space, rng), std::nullopt});
    }
    return pop;
}

Vector clamp(std::span<const double> position, const SearchSpace& space) {
    if (position.size() != space.dim()) {
        throw ValidationError("position has dimension " + std::to_string(position.size()) +
                              ", space has " + std::to_string(space.dim()));
    }
    Vector out(position.begin(), position.end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = std::clamp(out[k], space.lower()[k], space.upper()[k]);
    }
    return out;
}

double evaluate_candidate(Candidate& c, const Objective& objective) {
    double f = objective(c.position);
    if (!std::isfinite(f)) f = std::numeric_limits<double>::infinity();
    c.fitness = f;
    return f;
}

void offer_best(Population& pop, const Candidate& c) {
    if (!c.evaluated()) return;
    if (!pop.best_ever || rank_key(c.fitness) < rank_key(pop.best_ever->fitness)) {
        pop.best_ever = c;
    }
}

std::size_t evaluate(Population& pop, const Objective& objective) {
    for (auto& m : pop.members) evaluate_candidate(m, objective);
    // Index order plus strict improvement gives the lowest-index tie-break.
    for (const auto& m : pop.members) offer_best(pop, m);
    return pop.members.size();
}

}  // namespace goatopt
