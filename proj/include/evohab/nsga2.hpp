#pragma once

#include "evohab/core.hpp"
#include "evohab/evo.hpp"

namespace evohab::nsga2 {

struct MultiObjectiveProblem {
    std::vector<std::function<double(const Vector&)>> objectives;
    std::vector<Direction> directions;
    SearchDomain domain;
    std::vector<Constraint> constraints;

    Vector evaluate(const Vector& x) const {
        Vector f(static_cast<Eigen::Index>(objectives.size()));
        for (std::size_t i = 0; i < objectives.size(); ++i)
            f[static_cast<Eigen::Index>(i)] = objectives[i](x);
        return f;
    }
    bool feasible(const Vector& x) const {
        for (const auto& c : constraints)
            if (!c.predicate(x)) return false;
        return true;
    }
};

struct RankedIndividual {
    Vector genes;
    Vector objectives;
    int rank = 0;
    double crowding = 0.0;
};

struct ParetoFront {
    std::vector<RankedIndividual> members;  // all rank 0
};

struct Nsga2Result {
    ParetoFront front;
    std::vector<RankedIndividual> population;
};

/// Standard Pareto dominance: at least as good everywhere, strictly
/// better somewhere, after normalizing directions to minimization.
bool dominates(const Vector& a, const Vector& b, const std::vector<Direction>& directions);

/// Deb's fast non-dominated sort; returns fronts as index lists into the input.
std::vector<std::vector<int>> fast_non_dominated_sort(const std::vector<Vector>& objectives,
                                                      const std::vector<Direction>& directions);

/// Crowding distances for one front of objective vectors. Boundary members
/// per any objective get +infinity; a degenerate objective (max == min)
/// contributes nothing.
std::vector<double> crowding_distance(const std::vector<Vector>& front,
                                      const std::vector<Direction>& directions);

Nsga2Result nsga2_run(const MultiObjectiveProblem& problem, const GaConfig& config);

}  // namespace evohab::nsga2
