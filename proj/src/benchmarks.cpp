#include "goatopt/benchmarks.hpp"

#include <cmath>
#include <numbers>

namespace goatopt::benchmarks {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_dim(std::span<const double> x, std::size_t min_dim, const char* name) {
    if (x.size() < min_dim) {
        throw ValidationError(std::string(name) + " needs dimension >= " + std::to_string(min_dim));
    }
}

}  // namespace

double sphere(std::span<const double> x) {
    require_dim(x, 1, "sphere");
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

double schwefel_2_22(std::span<const double> x) {
    require_dim(x, 1, "schwefel_2_22");
    double sum = 0.0;
    double prod = 1.0;
    for (double v : x) {
        sum += std::abs(v);
        prod *= std::abs(v);
    }
    return sum + prod;
}

double rosenbrock(std::span<const double> x) {
    require_dim(x, 2, "rosenbrock");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double rastrigin(std::span<const double> x) {
    require_dim(x, 1, "rastrigin");
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x) sum += v * v - 10.0 * std::cos(two_pi * v);
    return sum;
}

double ackley(std::span<const double> x) {
    require_dim(x, 1, "ackley");
    const double d = static_cast<double>(x.size());
    double squares = 0.0;
    double cosines = 0.0;
    for (double v : x) {
        squares += v * v;
        cosines += std::cos(two_pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(squares / d)) - std::exp(cosines / d) + 20.0 +
           std::numbers::e;
}

double griewank(std::span<const double> x) {
    require_dim(x, 1, "griewank");
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 - prod + 1.0;
}

SearchSpace BenchmarkSpec::space(std::size_t dim) const {
    if (dim < min_dim) {
        throw ValidationError(name + " needs dimension >= " + std::to_string(min_dim));
    }
    return SearchSpace::uniform(dim, lower, upper);
}

const std::vector<BenchmarkSpec>& all() {
    static const std::vector<BenchmarkSpec> specs = {
        {"sphere", {"sphere", sphere}, -100.0, 100.0, 0.0, 0.0, 1},
        {"schwefel_2_22", {"schwefel_2_22", schwefel_2_22}, -10.0, 10.0, 0.0, 0.0, 1},
        {"rosenbrock", {"rosenbrock", rosenbrock}, -30.0, 30.0, 0.0, 1.0, 2},
        {"rastrigin", {"rastrigin", rastrigin}, -5.12, 5.12, 0.0, 0.0, 1},
        {"ackley", {"ackley", ackley}, -32.0, 32.0, 0.0, 0.0, 1},
        {"griewank", {"griewank", griewank}, -600.0, 600.0, 0.0, 0.0, 1},
    };
    return specs;
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& s : all()) out.push_back(s.name);
    return out;
}

const BenchmarkSpec& lookup(std::string_view name) {
    for (const auto& s : all()) {
        if (s.name == name) return s;
    }
    std::string valid;
    for (const auto& s : all()) valid += (valid.empty() ? "" : ", ") + s.name;
    throw NotFoundError("unknown function '" + std::string(name) + "'; valid functions: " + valid);
}

}  // namespace goatopt::benchmarks
