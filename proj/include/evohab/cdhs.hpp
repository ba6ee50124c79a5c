#pragma once

#include "evohab/core.hpp"
#include "evohab/nsga2.hpp"

#include <optional>

namespace evohab::cdhs {

struct DomainError : EvoError {
    using EvoError::EvoError;
};
struct InfeasibleCoupling : EvoError {
    using EvoError::EvoError;
};

/// Open-interval elasticity bounds are realized as [eps, 1 - eps].
inline constexpr double kEps = 1e-6;
inline constexpr double kDefaultCouplingMax = 2.0;

/// Planetary inputs, all in Earth Units (Earth = 1 in every field).
struct PlanetParams {
    double radius = 1.0;
    double density = 1.0;
    double escape_velocity = 1.0;
    double surface_temp = 1.0;

    void validate() const {
        if (!(radius > 0.0) || !(density > 0.0) || !(escape_velocity > 0.0) ||
            !(surface_temp > 0.0))
            throw DomainError("PlanetParams: all parameters must be strictly positive");
    }
};

/// Exponents weighting each parameter's contribution to the score.
struct Elasticities {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;

    void validate() const {
        auto in_range = [](double e) { return e >= kEps && e <= 1.0 - kEps; };
        if (!in_range(alpha) || !in_range(beta) || !in_range(gamma) || !in_range(delta))
            throw DomainError("Elasticities: each exponent must lie in [eps, 1-eps]");
        if (alpha + beta > 1.0) throw DomainError("Elasticities: alpha + beta must be <= 1");
        if (delta + gamma > 1.0) throw DomainError("Elasticities: delta + gamma must be <= 1");
    }
};

struct WeightPair {
    double w_interior = 0.5;
    double w_surface = 0.5;

    void validate() const {
        if (w_interior < 0.0 || w_interior > 1.0 || w_surface < 0.0 || w_surface > 1.0 ||
            std::abs(w_interior + w_surface - 1.0) > 1e-12)
            throw DomainError("WeightPair: weights must lie in [0,1] and sum to 1");
    }
};

struct FrontPoint {
    double y_interior = 0.0;
    double y_surface = 0.0;
    Elasticities elasticities;
    double coupling_c = 0.0;
};

struct CdhsResult {
    double interior_score = 0.0;
    double surface_score = 0.0;
    double combined = 0.0;
    Elasticities elasticities;
    std::optional<double> coupling_c;  // bi-objective mode only
    WeightPair weights;
    std::optional<std::vector<FrontPoint>> front;
};

double interior_score(const PlanetParams& p, const Elasticities& e);
double surface_score(const PlanetParams& p, const Elasticities& e);
double cdhs_single_objective(const PlanetParams& p, const Elasticities& e);

/// delta = alpha * (Ve / R) * C; feasibility of the result is the caller's check.
double derive_delta(double alpha, double coupling_c, const PlanetParams& p);

double combine(double y_i, double y_s, const WeightPair& weights);

CdhsResult optimize_cdhs_bi(const PlanetParams& p, const WeightPair& weights,
                            const GaConfig& config, double coupling_max = kDefaultCouplingMax);

CdhsResult optimize_cdhs_single(const PlanetParams& p, const WeightPair& weights,
                                const GaConfig& config);

/// Habitability score range over the weight simplex: for each w_i on the
/// grid, the best convex combination attainable on the front.
std::vector<std::pair<double, double>> weight_sweep(const std::vector<FrontPoint>& front,
                                                    int steps);

}  // namespace evohab::cdhs
