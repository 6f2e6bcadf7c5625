#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace goatopt {

// Thrown for malformed spaces, configs and argument shapes.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotFoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

using Vector = std::vector<double>;

/// Axis-aligned box [lower, upper] in R^dim.
class SearchSpace {
public:
    SearchSpace(Vector lower, Vector upper);

    /// Same scalar range on every axis.
    static SearchSpace uniform(std::size_t dim, double lower, double upper);

    std::size_t dim() const noexcept { return lower_.size(); }
    const Vector& lower() const noexcept { return lower_; }
    const Vector& upper() const noexcept { return upper_; }
    double width(std::size_t k) const noexcept { return upper_[k] - lower_[k]; }
    bool contains(std::span<const double> x) const noexcept;

private:
    Vector lower_;
    Vector upper_;
};

/// A position plus its fitness, if it has been evaluated.
///
/// Non-finite objective values are stored as +infinity so that they rank
/// behind every finite value.
struct Candidate {
    Vector position;
    std::optional<double> fitness;

    bool evaluated() const noexcept { return fitness.has_value(); }
};

/// Deterministic seeded generator. The engine is std::mt19937_64, whose output
/// is fully specified; the conversions to real values are done here rather
/// than through <random> distributions, which are implementation-defined.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal via Box-Muller; one draw per call, no cached spare.
    double normal();
    /// Uniform integer in [0, n). n must be positive.
    std::size_t index(std::size_t n);
    bool bernoulli(double p) { return uniform() < p; }

    /// Independent source for a sub-task, keyed by a stream id.
    RandomSource derive(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct Objective {
    std::string name;
    std::function<double(std::span<const double>)> eval;

    double operator()(std::span<const double> x) const { return eval(x); }
};

struct Population {
    std::vector<Candidate> members;
    std::optional<Candidate> best_ever;

    std::size_t size() const noexcept { return members.size(); }
};

enum class Termination { max_iterations, stalled_improvement, negligible_spread };

std::string_view to_string(Termination t) noexcept;

/// Outcome of one optimizer run. trace[0] is the best fitness after the
/// initial evaluation, followed by one entry per completed iteration.
struct RunResult {
    Candidate best;
    std::vector<double> trace;
    std::size_t evaluations = 0;
    Termination termination = Termination::max_iterations;
    std::uint64_t seed = 0;
};

/// An objective threw during a run; the message carries algorithm and iteration.
class RunFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordering key under minimization; non-finite values sort last.
inline double rank_key(const std::optional<double>& f) {
    return f.has_value() ? *f : std::numeric_limits<double>::infinity();
}

Vector random_position(const SearchSpace& space, RandomSource& rng);

Population init_population(const SearchSpace& space, std::size_t n, RandomSource& rng);

Vector clamp(std::span<const double> position, const SearchSpace& space);

/// Evaluates one candidate in place. Returns the stored fitness.
double evaluate_candidate(Candidate& c, const Objective& objective);

/// Offers a candidate to the elitist archive; replaces only on strict improvement.
void offer_best(Population& pop, const Candidate& c);

/// Evaluates every member, then updates best_ever. Returns evaluation count.
std::size_t evaluate(Population& pop, const Objective& objective);

/// Runs body() and rethrows any exception as RunFailure naming the context.
template <typename Body>
decltype(auto) with_run_context(std::string_view algorithm, const Objective& objective,
                                std::size_t iteration, Body&& body) {
    try {
        return body();
    } catch (const ValidationError&) {
        throw;
    } catch (const RunFailure&) {
        throw;
    } catch (const std::exception& e) {
        throw RunFailure(std::string(algorithm) + " on '" + objective.name +
                         "' failed at iteration " + std::to_string(iteration) + ": " + e.what());
    }
}

}  // namespace goatopt
