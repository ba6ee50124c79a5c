#include "evohab/nsga2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace evohab::nsga2 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double as_min(double value, Direction dir) {
    return dir == Direction::Minimize ? value : -value;
}

void rank_and_crowd(std::vector<RankedIndividual>& pop,
                    const std::vector<Direction>& directions) {
    std::vector<Vector> objectives;
    objectives.reserve(pop.size());
    for (const auto& ind : pop) objectives.push_back(ind.objectives);

    const auto fronts = fast_non_dominated_sort(objectives, directions);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        std::vector<Vector> front_objs;
        front_objs.reserve(fronts[r].size());
        for (int idx : fronts[r]) front_objs.push_back(objectives[idx]);
        const auto crowd = crowding_distance(front_objs, directions);
        for (std::size_t k = 0; k < fronts[r].size(); ++k) {
            pop[fronts[r][k]].rank = static_cast<int>(r);
            pop[fronts[r][k]].crowding = crowd[k];
        }
    }
}

/// Crowded-comparison: lower rank wins, ties broken by larger crowding.
bool crowded_less(const RankedIndividual& a, const RankedIndividual& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.crowding > b.crowding;
}

}  // namespace

bool dominates(const Vector& a, const Vector& b, const std::vector<Direction>& directions) {
    if (a.size() != b.size() || static_cast<std::size_t>(a.size()) != directions.size())
        throw LengthMismatch("dominates: objective vector length mismatch");
    bool strictly_better = false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double ai = as_min(a[i], directions[i]);
        const double bi = as_min(b[i], directions[i]);
        if (ai > bi) return false;
        if (ai < bi) strictly_better = true;
    }
    return strictly_better;
}

std::vector<std::vector<int>> fast_non_dominated_sort(const std::vector<Vector>& objectives,
                                                      const std::vector<Direction>& directions) {
    const int n = static_cast<int>(objectives.size());
    std::vector<std::vector<int>> dominated(n);   // indices each individual dominates
    std::vector<int> domination_count(n, 0);      // how many dominate this one

    std::vector<std::vector<int>> fronts(1);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            if (dominates(objectives[p], objectives[q], directions))
                dominated[p].push_back(q);
            else if (dominates(objectives[q], objectives[p], directions))
                ++domination_count[p];
        }
        if (domination_count[p] == 0) fronts[0].push_back(p);
    }

    std::size_t current = 0;
    while (!fronts[current].empty()) {
        std::vector<int> next;
        for (int p : fronts[current]) {
            for (int q : dominated[p]) {
                if (--domination_count[q] == 0) next.push_back(q);
            }
        }
        ++current;
        fronts.push_back(std::move(next));
    }
    fronts.pop_back();  // last front is always empty
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<Vector>& front,
                                      const std::vector<Direction>& directions) {
    const int n = static_cast<int>(front.size());
    std::vector<double> distance(n, 0.0);
    if (n == 0) return distance;

    for (std::size_t m = 0; m < directions.size(); ++m) {
        const auto obj = [&](int i) { return front[i][static_cast<Eigen::Index>(m)]; };
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return obj(a) < obj(b); });

        distance[order.front()] = kInf;
        distance[order.back()] = kInf;
        const double span = obj(order.back()) - obj(order.front());
        if (span <= 0.0) continue;  // degenerate objective contributes nothing
        for (int k = 1; k + 1 < n; ++k) {
            if (distance[order[k]] == kInf) continue;
            distance[order[k]] += (obj(order[k + 1]) - obj(order[k - 1])) / span;
        }
    }
    return distance;
}

Nsga2Result nsga2_run(const MultiObjectiveProblem& problem, const GaConfig& config) {
    config.validate();
    if (problem.objectives.size() < 2 || problem.objectives.size() != problem.directions.size())
        throw std::invalid_argument("nsga2_run: need >= 2 objectives with matching directions");

    Rng init_rng = stream_rng(config.seed, 0, 0);
    long budget = static_cast<long>(config.max_rejections) * config.population_size;
    std::vector<RankedIndividual> population;
    population.reserve(config.population_size);
    for (int i = 0; i < config.population_size; ++i) {
        Vector genes =
            evo::sample_feasible_point(problem.domain, problem.constraints, budget, init_rng);
        population.push_back({genes, problem.evaluate(genes), 0, 0.0});
    }

    const Vector sigma = evo::base_sigma(problem.domain, config);
    const int parents = config.population_size / 2;

    for (int gen = 1; gen <= config.generations; ++gen) {
        rank_and_crowd(population, problem.directions);
        std::stable_sort(population.begin(), population.end(), crowded_less);

        std::vector<RankedIndividual> pool = population;
        for (int i = 0; i < parents; ++i) {
            Rng rng = stream_rng(config.seed, static_cast<std::uint64_t>(gen), i);
            try {
                Vector genes = evo::sample_child_genes(population[i].genes, sigma, problem.domain,
                                                       problem.constraints, config, rng);
                pool.push_back({genes, problem.evaluate(genes), 0, 0.0});
            } catch (const ReproductionExhausted&) {
                pool.push_back(population[i]);
            }
        }

        rank_and_crowd(pool, problem.directions);
        std::stable_sort(pool.begin(), pool.end(), crowded_less);
        pool.resize(config.population_size);
        population = std::move(pool);
    }

    rank_and_crowd(population, problem.directions);
    Nsga2Result result;
    result.population = population;
    for (const auto& ind : population)
        if (ind.rank == 0) result.front.members.push_back(ind);
    return result;
}

}  // namespace evohab::nsga2
