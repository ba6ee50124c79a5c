#pragma once

#include "evohab/core.hpp"
#include "evohab/nsga2.hpp"

#include <optional>
#include <variant>

namespace evohab::benchmarks {

struct UnknownBenchmark : EvoError {
    using EvoError::EvoError;
};
struct NoKnownLocation : EvoError {
    using EvoError::EvoError;
};
struct EmptySet : EvoError {
    using EvoError::EvoError;
};

struct BenchmarkCase {
    std::string name;
    OptimizationProblem problem;
    double known_optimum_value = 0.0;
    double tolerance = 1e-2;
    std::optional<Vector> known_optimum_location;
};

struct MoBenchmarkCase {
    std::string name;
    nsga2::MultiObjectiveProblem problem;
    int reference_front_resolution = 1000;
    double igd_threshold = 1.0;
};

using AnyCase = std::variant<BenchmarkCase, MoBenchmarkCase>;

/// Throws UnknownBenchmark (listing valid names) for unregistered keys.
const AnyCase& lookup(const std::string& name);
const BenchmarkCase& lookup_single(const std::string& name);
const MoBenchmarkCase& lookup_mo(const std::string& name);

/// Registration order: 11 unconstrained, then 5 constrained.
const std::vector<std::string>& single_objective_names();
const std::vector<std::string>& unconstrained_names();
const std::vector<std::string>& constrained_names();
const std::vector<std::string>& mo_names();

double evaluate_at_optimum(const BenchmarkCase& c);

/// Brute-force reference front: uniform decision-space grid sweep,
/// feasible points only, non-dominated subset sorted by first objective.
std::vector<Vector> reference_front(const MoBenchmarkCase& c);

/// Inverted generational distance: mean distance from each reference
/// point to its nearest obtained point.
double igd(const std::vector<Vector>& obtained, const std::vector<Vector>& reference);

}  // namespace evohab::benchmarks
