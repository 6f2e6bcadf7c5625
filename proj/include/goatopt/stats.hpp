#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace goatopt::stats {

struct SampleSummary {
    std::size_t n = 0;
    double best = 0.0;
    double mean = 0.0;
    double std = 0.0;  // n - 1 denominator; 0 for a single value
};

SampleSummary summarize(std::span<const double> values);

/// Ranks 1..n; tied values share the mean of the ranks they cover.
std::vector<double> midranks(std::span<const double> values);

enum class RankSumMethod { exact, normal_approx };

std::string_view to_string(RankSumMethod m) noexcept;

struct RankSumResult {
    double statistic = 0.0;  // rank sum W of the first sample; U = W - n1(n1+1)/2
    double p_value = 1.0;    // two-sided
    RankSumMethod method = RankSumMethod::exact;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

/// Pooled sizes up to this use the exact null distribution.
inline constexpr std::size_t exact_threshold = 20;

/// Unpaired two-sided Wilcoxon rank-sum test.
RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b);

// Both paths are exposed so they can be compared where each is valid.
RankSumResult rank_sum_exact(std::span<const double> a, std::span<const double> b);
RankSumResult rank_sum_normal(std::span<const double> a, std::span<const double> b);

}  // namespace goatopt::stats
