#pragma once

#include "goatopt/core.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace goatopt::benchmarks {

double sphere(std::span<const double> x);
double schwefel_2_22(std::span<const double> x);
/// Requires at least two coordinates.
double rosenbrock(std::span<const double> x);
double rastrigin(std::span<const double> x);
double ackley(std::span<const double> x);
/// Uses the 1-based coordinate index inside the cosine product.
double griewank(std::span<const double> x);

struct BenchmarkSpec {
    std::string name;
    Objective objective;
    double lower;  // applied to every axis
    double upper;
    double optimum_value;
    double optimizer_coordinate;  // the minimizer is this value on every axis
    std::size_t min_dim;

    SearchSpace space(std::size_t dim) const;
    Vector optimizer_point(std::size_t dim) const { return Vector(dim, optimizer_coordinate); }
};

/// Throws NotFoundError listing the valid names.
const BenchmarkSpec& lookup(std::string_view name);

/// All six, in table order.
const std::vector<BenchmarkSpec>& all();

std::vector<std::string> names();

}  // namespace goatopt::benchmarks
