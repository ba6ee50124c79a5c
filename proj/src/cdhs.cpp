#include "evohab/cdhs.hpp"

#include "evohab/evo.hpp"

#include <cmath>

namespace evohab::cdhs {

double interior_score(const PlanetParams& p, const Elasticities& e) {
    return std::pow(p.radius, e.alpha) * std::pow(p.density, e.beta);
}

double surface_score(const PlanetParams& p, const Elasticities& e) {
    return std::pow(p.escape_velocity, e.delta) * std::pow(p.surface_temp, e.gamma);
}

double cdhs_single_objective(const PlanetParams& p, const Elasticities& e) {
    p.validate();
    return interior_score(p, e) * surface_score(p, e);
}

double derive_delta(double alpha, double coupling_c, const PlanetParams& p) {
    return alpha * (p.escape_velocity / p.radius) * coupling_c;
}

double combine(double y_i, double y_s, const WeightPair& weights) {
    weights.validate();
    return weights.w_interior * y_i + weights.w_surface * y_s;
}

namespace {

Elasticities from_bi_genes(const Vector& genes, const PlanetParams& p) {
    Elasticities e;
    e.alpha = genes[0];
    e.beta = genes[1];
    e.gamma = genes[2];
    e.delta = derive_delta(genes[0], genes[3], p);
    return e;
}

bool bi_feasible(const Vector& genes, const PlanetParams& p) {
    const Elasticities e = from_bi_genes(genes, p);
    return e.alpha + e.beta <= 1.0 && e.delta >= kEps && e.delta <= 1.0 - kEps &&
           e.delta + e.gamma <= 1.0;
}

}  // namespace

CdhsResult optimize_cdhs_bi(const PlanetParams& p, const WeightPair& weights,
                            const GaConfig& config, double coupling_max) {
    p.validate();
    weights.validate();
    if (!(coupling_max > kEps))
        throw InfeasibleCoupling("coupling_max leaves no room for a positive coupling factor");

    Vector lower(4), upper(4);
    lower << kEps, kEps, kEps, kEps;
    upper << 1.0 - kEps, 1.0 - kEps, 1.0 - kEps, coupling_max;

    nsga2::MultiObjectiveProblem problem;
    problem.domain = SearchDomain(lower, upper);
    problem.directions = {Direction::Maximize, Direction::Maximize};
    problem.objectives = {
        [p](const Vector& g) { return interior_score(p, from_bi_genes(g, p)); },
        [p](const Vector& g) { return surface_score(p, from_bi_genes(g, p)); }};
    problem.constraints = {
        {[p](const Vector& g) { return bi_feasible(g, p); },
         "alpha+beta <= 1, derived delta in (0,1), delta+gamma <= 1"}};

    nsga2::Nsga2Result moresult;
    try {
        moresult = nsga2::nsga2_run(problem, config);
    } catch (const InitializationExhausted&) {
        throw InfeasibleCoupling("no feasible (alpha, beta, gamma, C) found at initialization");
    }

    CdhsResult result;
    result.weights = weights;
    result.front.emplace();
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& member : moresult.front.members) {
        FrontPoint pt{member.objectives[0], member.objectives[1],
                      from_bi_genes(member.genes, p), member.genes[3]};
        const double value = combine(pt.y_interior, pt.y_surface, weights);
        if (value > best) {
            best = value;
            result.interior_score = pt.y_interior;
            result.surface_score = pt.y_surface;
            result.combined = value;
            result.elasticities = pt.elasticities;
            result.coupling_c = pt.coupling_c;
        }
        result.front->push_back(std::move(pt));
    }
    return result;
}

CdhsResult optimize_cdhs_single(const PlanetParams& p, const WeightPair& weights,
                                const GaConfig& config) {
    p.validate();
    weights.validate();

    auto to_elasticities = [](const Vector& g) {
        Elasticities e;
        e.alpha = g[0];
        e.beta = g[1];
        e.gamma = g[2];
        e.delta = g[3];
        return e;
    };

    OptimizationProblem problem;
    problem.domain = SearchDomain(4, kEps, 1.0 - kEps);
    problem.direction = Direction::Maximize;
    problem.objective = [p, to_elasticities](const Vector& g) {
        return cdhs_single_objective(p, to_elasticities(g));
    };
    problem.constraints = {
        {[](const Vector& g) { return g[0] + g[1] <= 1.0; }, "alpha + beta <= 1"},
        {[](const Vector& g) { return g[3] + g[2] <= 1.0; }, "delta + gamma <= 1"}};

    const evo::GaResult ga = evo::run(problem, config);

    CdhsResult result;
    result.weights = weights;
    result.elasticities = to_elasticities(ga.best.genes);
    result.interior_score = interior_score(p, result.elasticities);
    result.surface_score = surface_score(p, result.elasticities);
    result.combined = ga.best.fitness;
    return result;
}

std::vector<std::pair<double, double>> weight_sweep(const std::vector<FrontPoint>& front,
                                                    int steps) {
    if (front.empty()) throw DomainError("weight_sweep: front must be non-empty");
    if (steps <= 0) throw DomainError("weight_sweep: steps must be positive");

    std::vector<std::pair<double, double>> sweep;
    sweep.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        const double wi = static_cast<double>(k) / steps;
        const WeightPair w{wi, 1.0 - wi};
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& pt : front)
            best = std::max(best, combine(pt.y_interior, pt.y_surface, w));
        sweep.emplace_back(wi, best);
    }
    return sweep;
}

}  // namespace evohab::cdhs
