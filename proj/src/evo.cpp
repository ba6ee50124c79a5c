#include "evohab/evo.hpp"

#include <algorithm>

namespace evohab::evo {

namespace {

Vector uniform_point(const SearchDomain& domain, Rng& rng) {
    Vector x(domain.dims());
    for (Eigen::Index i = 0; i < domain.dims(); ++i) {
        std::uniform_real_distribution<double> u(domain.lower[i], domain.upper[i]);
        x[i] = u(rng);
    }
    return x;
}

bool satisfies(const std::vector<Constraint>& constraints, const Vector& x) {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const Constraint& c) { return c.predicate(x); });
}

void sort_by_fitness(std::vector<Individual>& pop, Direction dir) {
    std::stable_sort(pop.begin(), pop.end(), [dir](const Individual& a, const Individual& b) {
        return better(a.fitness, b.fitness, dir);
    });
}

}  // namespace

Vector base_sigma(const SearchDomain& domain, const GaConfig& config) {
    return config.sigma_fraction * domain.range();
}

Vector sample_feasible_point(const SearchDomain& domain,
                             const std::vector<Constraint>& constraints, long& budget, Rng& rng) {
    while (budget > 0) {
        --budget;
        Vector x = uniform_point(domain, rng);
        if (satisfies(constraints, x)) return x;
    }
    throw InitializationExhausted("could not sample a feasible point within the draw budget");
}

Vector sample_child_genes(const Vector& parent, const Vector& sigma, const SearchDomain& domain,
                          const std::vector<Constraint>& constraints, const GaConfig& config,
                          Rng& rng, ReproduceStats* stats) {
    double scale = 1.0;
    int consecutive = 0;
    int rejections = 0;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < kReproduceRetryCap; ++attempt) {
        Vector child(parent.size());
        for (Eigen::Index i = 0; i < parent.size(); ++i)
            child[i] = parent[i] + scale * sigma[i] * gauss(rng);
        child = domain.clamp(child);
        if (satisfies(constraints, child)) {
            if (stats) *stats = {rejections, scale};
            return child;
        }
        ++rejections;
        if (++consecutive >= config.max_rejections) {
            consecutive = 0;
            scale *= config.sigma_growth;
        }
    }
    if (stats) *stats = {rejections, scale};
    throw ReproductionExhausted("no feasible child found within the retry cap");
}

std::vector<Individual> init_population(const OptimizationProblem& problem,
                                        const GaConfig& config, Rng& rng) {
    config.validate();
    long budget = static_cast<long>(config.max_rejections) * config.population_size;
    std::vector<Individual> population;
    population.reserve(config.population_size);
    for (int i = 0; i < config.population_size; ++i) {
        Vector genes = sample_feasible_point(problem.domain, problem.constraints, budget, rng);
        population.push_back({genes, problem.objective(genes)});
    }
    return population;
}

Individual reproduce(const Individual& parent, const Vector& sigma,
                     const OptimizationProblem& problem, const GaConfig& config, Rng& rng,
                     ReproduceStats* stats) {
    Vector genes = sample_child_genes(parent.genes, sigma, problem.domain, problem.constraints,
                                      config, rng, stats);
    return {genes, problem.objective(genes)};
}

std::vector<Individual> evolve_step(const std::vector<Individual>& population,
                                    const OptimizationProblem& problem, const GaConfig& config,
                                    int generation) {
    std::vector<Individual> pool = population;
    sort_by_fitness(pool, problem.direction);

    const Vector sigma = base_sigma(problem.domain, config);
    const int parents = config.population_size / 2;
    for (int i = 0; i < parents; ++i) {
        Rng rng = stream_rng(config.seed, static_cast<std::uint64_t>(generation), i);
        try {
            pool.push_back(reproduce(pool[i], sigma, problem, config, rng));
        } catch (const ReproductionExhausted&) {
            pool.push_back(pool[i]);  // fall back to cloning the parent
        }
    }

    sort_by_fitness(pool, problem.direction);
    pool.resize(config.population_size);
    return pool;
}

GaResult run(const OptimizationProblem& problem, const GaConfig& config) {
    config.validate();
    Rng init_rng = stream_rng(config.seed, 0, 0);
    std::vector<Individual> population = init_population(problem, config, init_rng);

    auto best_of = [&](const std::vector<Individual>& pop) {
        const Individual* best = &pop.front();
        for (const auto& ind : pop)
            if (better(ind.fitness, best->fitness, problem.direction)) best = &ind;
        return *best;
    };

    GaResult result;
    result.history.reserve(config.generations + 1);
    result.best = best_of(population);
    result.history.push_back(result.best.fitness);

    for (int gen = 1; gen <= config.generations; ++gen) {
        population = evolve_step(population, problem, config, gen);
        // after evolve_step the population is sorted, so front() is the best
        result.best = population.front();
        result.history.push_back(result.best.fitness);
    }
    return result;
}

}  // namespace evohab::evo
