#pragma once

#include "goatopt/core.hpp"

#include <string_view>

namespace goatopt::baselines::detail {

// Evaluation counting, elitist archive and trace shared by every baseline.
class Tracker {
public:
    Tracker(std::string_view algorithm, const Objective& objective, std::uint64_t seed)
        : algorithm_(algorithm), objective_(objective) {
        result_.seed = seed;
    }

    double evaluate(Candidate& c) {
        const double f = with_run_context(algorithm_, objective_, iteration_,
                                          [&] { return evaluate_candidate(c, objective_); });
        ++result_.evaluations;
        if (!best_.evaluated() || f < rank_key(best_.fitness)) best_ = c;
        return f;
    }

    double best_fitness() const { return rank_key(best_.fitness); }
    const Candidate& best() const { return best_; }

    /// Closes the current iteration (or the initial evaluation) in the trace.
    void record() {
        result_.trace.push_back(best_fitness());
        ++iteration_;
    }

    RunResult finish() {
        result_.best = best_;
        result_.termination = Termination::max_iterations;
        return std::move(result_);
    }

private:
    std::string_view algorithm_;
    const Objective& objective_;
    std::size_t iteration_ = 0;
    Candidate best_;
    RunResult result_;
};

}  // namespace goatopt::baselines::detail
