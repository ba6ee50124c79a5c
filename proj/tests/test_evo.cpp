#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evohab/benchmarks.hpp"
#include "evohab/evo.hpp"

using namespace evohab;

namespace {

OptimizationProblem sphere_problem(int dims = 2, double half_width = 5.0) {
    OptimizationProblem p;
    p.objective = [](const Vector& x) { return x.squaredNorm(); };
    p.domain = SearchDomain(dims, -half_width, half_width);
    return p;
}

GaConfig small_config(int pop, int gens, std::uint64_t seed = 42) {
    GaConfig c;
    c.population_size = pop;
    c.generations = gens;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("config validation rejects odd population sizes") {
    GaConfig c = small_config(7, 10);
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.population_size = 8;
    CHECK_NOTHROW(c.validate());
    c.sigma_fraction = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("init_population fills a feasible, evaluated population") {
    const auto& rastrigin = benchmarks::lookup_single("rastrigin");
    GaConfig config = small_config(200, 1, 42);
    Rng rng = stream_rng(config.seed, 0, 0);
    auto pop = evo::init_population(rastrigin.problem, config, rng);

    REQUIRE(pop.size() == 200);
    for (const auto& ind : pop) {
        CHECK(rastrigin.problem.domain.contains(ind.genes));
        CHECK(ind.fitness >= 0.0);  // non-negative on its whole domain
        CHECK(ind.fitness == rastrigin.problem.objective(ind.genes));
    }
}

TEST_CASE("init_population respects additional constraints") {
    const auto& bird = benchmarks::lookup_single("mishra-bird");
    GaConfig config = small_config(100, 1, 7);
    Rng rng = stream_rng(config.seed, 0, 0);
    auto pop = evo::init_population(bird.problem, config, rng);
    for (const auto& ind : pop) {
        const double x = ind.genes[0], y = ind.genes[1];
        CHECK((x + 5) * (x + 5) + (y + 5) * (y + 5) < 25.0);
    }
}

TEST_CASE("unconstrained init never exhausts even with max_rejections = 1") {
    auto problem = sphere_problem();
    GaConfig config = small_config(50, 1);
    config.max_rejections = 1;
    Rng rng(1);
    CHECK_NOTHROW(evo::init_population(problem, config, rng));
}

TEST_CASE("infeasible region raises InitializationExhausted") {
    auto problem = sphere_problem();
    problem.constraints = {{[](const Vector&) { return false; }, "never"}};
    GaConfig config = small_config(10, 1);
    Rng rng(1);
    CHECK_THROWS_AS(evo::init_population(problem, config, rng), InitializationExhausted);
}

TEST_CASE("zero sigma reproduces the parent exactly") {
    auto problem = sphere_problem();
    GaConfig config = small_config(10, 1);
    Individual parent{Vector::Constant(2, 1.5), 4.5};
    Rng rng(3);
    auto child = evo::reproduce(parent, Vector::Zero(2), problem, config, rng);
    CHECK(child.genes == parent.genes);
}

TEST_CASE("children are clamped to bounds") {
    auto problem = sphere_problem(2, 1.0);
    GaConfig config = small_config(10, 1);
    Individual parent{Vector::Constant(2, 1.0), 2.0};  // parent sits on the upper bound
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        auto child = evo::reproduce(parent, Vector::Constant(2, 100.0), problem, config, rng);
        CHECK(problem.domain.contains(child.genes));
    }
}

TEST_CASE("constraint rejection retries and widens sigma") {
    auto problem = sphere_problem(2, 10.0);
    problem.constraints = {{[](const Vector& x) { return x[0] <= 0.45; }, "half plane"}};
    GaConfig config = small_config(10, 1);
    Vector parent_genes(2);
    parent_genes << 0.4, 0.0;

    // Feasible but hard to hit: retries are observed, the child ends feasible.
    Rng rng(11);
    evo::ReproduceStats stats;
    int total_rejections = 0;
    for (int i = 0; i < 20; ++i) {
        auto child = evo::reproduce({parent_genes, 0.16}, Vector::Constant(2, 1.0), problem,
                                    config, rng, &stats);
        CHECK(problem.feasible(child.genes));
        total_rejections += stats.rejections;
    }
    CHECK(total_rejections > 0);

    // Never satisfiable: the widening factor grows before the retry cap aborts.
    auto impossible = problem;
    impossible.constraints = {{[](const Vector&) { return false; }, "never"}};
    Rng rng2(12);
    evo::ReproduceStats stats2;
    CHECK_THROWS_AS(evo::reproduce({parent_genes, 0.16}, Vector::Constant(2, 1.0), impossible,
                                   config, rng2, &stats2),
                    ReproductionExhausted);
    CHECK(stats2.rejections > 0);
    CHECK(stats2.sigma_scale > 1.0);
}

TEST_CASE("evolve_step selects the best half as parents") {
    OptimizationProblem p;
    p.objective = [](const Vector& x) { return x[0]; };
    p.domain = SearchDomain(1, 0.0, 10.0);

    GaConfig config = small_config(4, 1, 9);
    config.sigma_fraction = 1e-12;  // effectively clones, keeps selection visible
    std::vector<Individual> pop;
    for (double f : {3.0, 1.0, 4.0, 2.0}) pop.push_back({Vector::Constant(1, f), f});

    auto next = evo::evolve_step(pop, p, config, 1);
    REQUIRE(next.size() == 4);
    // children of the fitness-1 and fitness-2 parents join the merge, so the
    // survivors are (about) [1, 1, 2, 2]
    CHECK(next[0].fitness == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(next[1].fitness == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(next[2].fitness == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(next[3].fitness == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("zero sigma creates no new genes, only copies of the fittest") {
    const auto& rastrigin = benchmarks::lookup_single("rastrigin");
    GaConfig config = small_config(20, 1, 13);
    Rng rng = stream_rng(config.seed, 0, 0);
    auto pop = evo::init_population(rastrigin.problem, config, rng);

    config.sigma_fraction = 0.0;  // evolve_step itself does not re-validate
    std::vector<double> original;
    double best = 1e300;
    for (const auto& ind : pop) {
        original.push_back(ind.fitness);
        best = std::min(best, ind.fitness);
    }
    for (int g = 1; g <= 5; ++g) pop = evo::evolve_step(pop, rastrigin.problem, config, g);
    double new_best = 1e300;
    for (const auto& ind : pop) {
        // every survivor is a clone of someone from the initial population
        CHECK(std::find(original.begin(), original.end(), ind.fitness) != original.end());
        new_best = std::min(new_best, ind.fitness);
    }
    CHECK(new_best == best);
}

TEST_CASE("elitist merge never worsens the best fitness") {
    const auto& rastrigin = benchmarks::lookup_single("rastrigin");
    GaConfig config = small_config(20, 60, 3);
    auto result = evo::run(rastrigin.problem, config);
    REQUIRE(result.history.size() == 61);
    for (std::size_t i = 1; i < result.history.size(); ++i)
        CHECK(result.history[i] <= result.history[i - 1]);
    CHECK(result.best.fitness == result.history.back());
}

TEST_CASE("elitism also holds under maximization") {
    OptimizationProblem p;
    p.objective = [](const Vector& x) { return -x.squaredNorm(); };
    p.direction = Direction::Maximize;
    p.domain = SearchDomain(2, -3.0, 3.0);
    auto result = evo::run(p, small_config(16, 40, 4));
    for (std::size_t i = 1; i < result.history.size(); ++i)
        CHECK(result.history[i] >= result.history[i - 1]);
}

TEST_CASE("identical seeds give identical runs") {
    const auto& beale = benchmarks::lookup_single("beale");
    GaConfig config = small_config(30, 50, 2024);
    auto a = evo::run(beale.problem, config);
    auto b = evo::run(beale.problem, config);
    CHECK(a.history == b.history);
    CHECK(a.best.genes == b.best.genes);
}

TEST_CASE("population stays feasible and fixed-size across generations") {
    const auto& bird = benchmarks::lookup_single("mishra-bird");
    GaConfig config = small_config(30, 1, 77);
    Rng rng = stream_rng(config.seed, 0, 0);
    auto pop = evo::init_population(bird.problem, config, rng);
    for (int g = 1; g <= 30; ++g) {
        pop = evo::evolve_step(pop, bird.problem, config, g);
        REQUIRE(pop.size() == 30);
        for (const auto& ind : pop) {
            CHECK(bird.problem.domain.contains(ind.genes));
            CHECK(bird.problem.feasible(ind.genes));
        }
    }
}

TEST_CASE("a short run makes real progress on rastrigin") {
    const auto& rastrigin = benchmarks::lookup_single("rastrigin");
    auto result = evo::run(rastrigin.problem, small_config(100, 300, 5));
    CHECK(result.best.fitness < 0.5);
}
