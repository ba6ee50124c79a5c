#pragma once

#include "evohab/core.hpp"

namespace evohab::evo {

/// Diagnostics from a single reproduction call.
struct ReproduceStats {
    int rejections = 0;
    double sigma_scale = 1.0;  // final widening factor applied to sigma
};

struct GaResult {
    Individual best;
    std::vector<double> history;  // per-generation best fitness, initial population included
};

/// Absolute retry cap inside reproduce before giving up on a parent.
inline constexpr int kReproduceRetryCap = 1000;

/// Uniformly samples one in-bounds point satisfying all constraints.
/// Decrements *budget per draw; throws InitializationExhausted when spent.
Vector sample_feasible_point(const SearchDomain& domain,
                             const std::vector<Constraint>& constraints, long& budget, Rng& rng);

/// Gaussian child genes centered at the parent, clamped to bounds,
/// re-drawn until all constraints hold. Every config.max_rejections
/// consecutive rejections the sigma is widened by config.sigma_growth.
Vector sample_child_genes(const Vector& parent, const Vector& sigma, const SearchDomain& domain,
                          const std::vector<Constraint>& constraints, const GaConfig& config,
                          Rng& rng, ReproduceStats* stats = nullptr);

/// Per-dimension base sigma: sigma_fraction of the domain range.
Vector base_sigma(const SearchDomain& domain, const GaConfig& config);

std::vector<Individual> init_population(const OptimizationProblem& problem,
                                        const GaConfig& config, Rng& rng);

Individual reproduce(const Individual& parent, const Vector& sigma,
                     const OptimizationProblem& problem, const GaConfig& config, Rng& rng,
                     ReproduceStats* stats = nullptr);

/// One elitist generation: best half parents each spawn one Gaussian child,
/// the whole old generation is merged with the children and the best
/// population_size survive.
std::vector<Individual> evolve_step(const std::vector<Individual>& population,
                                    const OptimizationProblem& problem, const GaConfig& config,
                                    int generation);

GaResult run(const OptimizationProblem& problem, const GaConfig& config);

}  // namespace evohab::evo
