#include "goatopt/stats.hpp"

#include "goatopt/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace goatopt::stats {

std::string_view to_string(RankSumMethod m) noexcept {
    return m == RankSumMethod::exact ? "exact" : "normal_approx";
}

SampleSummary summarize(std::span<const double> values) {
    if (values.empty()) throw ValidationError("summarize needs at least one value");
    SampleSummary s;
    s.n = values.size();
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.best = *lo;
    if (*lo == *hi) {
        s.mean = *lo;
        return s;
    }
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
    {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    // Rounding in the mean can otherwise place it a hair below the minimum.
    if (s.mean < s.best) s.mean = s.best;
    return s;
}

std::vector<double> midranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        // Positions i..j-1 hold ranks i+1..j.
        const double rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
        i = j;
    }
    return ranks;
}

namespace {

void require_samples(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw ValidationError("rank-sum test needs two non-empty samples");
}

std::vector<double> pooled(std::span<const double> a, std::span<const double> b) {
    std::vector<double> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return all;
}

}  // namespace

RankSumResult rank_sum_exact(std::span<const double> a, std::span<const double> b) {
    require_samples(a, b);
    const std::size_t n1 = a.size();
    const std::size_t n = n1 + b.size();
    const std::vector<double> ranks = midranks(pooled(a, b));

    // Midranks are multiples of 1/2, so doubled ranks are exact integers.
    std::vector<std::int64_t> doubled(n);
    std::int64_t observed = 0;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        doubled[i] = std::llround(2.0 * ranks[i]);
        total += doubled[i];
        if (i < n1) observed += doubled[i];
    }

    // counts[k][s]: number of k-subsets of the pooled ranks with doubled sum s.
    const auto max_sum = static_cast<std::size_t>(total);
    std::vector<std::vector<double>> counts(n1 + 1, std::vector<double>(max_sum + 1, 0.0));
    counts[0][0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = static_cast<std::size_t>(doubled[i]);
        for (std::size_t k = std::min(i + 1, n1); k >= 1; --k) {
            for (std::size_t s = max_sum; s >= r; --s) {
                counts[k][s] += counts[k - 1][s - r];
                if (s == r) break;
            }
        }
    }

    // n * (2W - 2E[W]) with 2E[W] = n1 * total / n, kept in integers.
    const std::int64_t scaled_mean = static_cast<std::int64_t>(n1) * total;
    const auto deviation = [&](std::int64_t sum2) {
        return std::llabs(static_cast<std::int64_t>(n) * sum2 - scaled_mean);
    };
    const std::int64_t observed_dev = deviation(observed);
    double extreme = 0.0;
    double all_subsets = 0.0;
    for (std::size_t s = 0; s <= max_sum; ++s) {
        const double c = counts[n1][s];
        if (c == 0.0) continue;
        all_subsets += c;
        if (deviation(static_cast<std::int64_t>(s)) >= observed_dev) extreme += c;
    }

    RankSumResult r;
    r.statistic = static_cast<double>(observed) / 2.0;
    r.p_value = std::min(1.0, extreme / all_subsets);
    r.method = RankSumMethod::exact;
    r.n1 = n1;
    r.n2 = b.size();
    return r;
}

RankSumResult rank_sum_normal(std::span<const double> a, std::span<const double> b) {
    require_samples(a, b);
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const double nn = static_cast<double>(n1 + n2);
    std::vector<double> all = pooled(a, b);
    const std::vector<double> ranks = midranks(all);

    double w = 0.0;
    for (std::size_t i = 0; i < n1; ++i) w += ranks[i];

    std::sort(all.begin(), all.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i + 1;
        while (j < all.size() && all[j] == all[i]) ++j;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }

    const double mean = static_cast<double>(n1) * (nn + 1.0) / 2.0;
    double variance = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 * (nn + 1.0);
    if (nn > 1.0) variance -= static_cast<double>(n1) * static_cast<double>(n2) * tie_term / (12.0 * nn * (nn - 1.0));

    RankSumResult r;
    r.statistic = w;
    r.method = RankSumMethod::normal_approx;
    r.n1 = n1;
    r.n2 = n2;
    if (variance <= 0.0) {
        r.p_value = 1.0;
        return r;
    }
    const double z = std::max(0.0, std::abs(w - mean) - 0.5) / std::sqrt(variance);
    r.p_value = std::clamp(std::erfc(z / std::sqrt(2.0)), std::numeric_limits<double>::min(), 1.0);
    return r;
}

RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b) {
    require_samples(a, b);
    if (a.size() + b.size() <= exact_threshold) return rank_sum_exact(a, b);
    return rank_sum_normal(a, b);
}

}  // namespace goatopt::stats
