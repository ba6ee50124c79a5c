#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace evohab {

using Vector = Eigen::VectorXd;

enum class Direction { Minimize, Maximize };

struct EvoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InitializationExhausted : EvoError {
    using EvoError::EvoError;
};
struct ReproductionExhausted : EvoError {
    using EvoError::EvoError;
};
struct LengthMismatch : EvoError {
    using EvoError::EvoError;
};

/// Axis-aligned box bounds for the decision space.
struct SearchDomain {
    Vector lower;
    Vector upper;

    SearchDomain() = default;
    SearchDomain(Vector lo, Vector hi) : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower.size() != upper.size())
            throw std::invalid_argument("SearchDomain: bound length mismatch");
        for (Eigen::Index i = 0; i < lower.size(); ++i)
            if (!(lower[i] < upper[i]))
                throw std::invalid_argument("SearchDomain: lower must be < upper per dimension");
    }
    /// Symmetric helper: same [lo, hi] interval in every dimension.
    SearchDomain(int dims, double lo, double hi)
        : SearchDomain(Vector::Constant(dims, lo), Vector::Constant(dims, hi)) {}

    Eigen::Index dims() const { return lower.size(); }

    bool contains(const Vector& x) const {
        return x.size() == lower.size() && (x.array() >= lower.array()).all() &&
               (x.array() <= upper.array()).all();
    }
    Vector clamp(const Vector& x) const {
        return x.cwiseMax(lower).cwiseMin(upper);
    }
    Vector range() const { return upper - lower; }
};

/// A feasibility predicate beyond the box bounds. Must be pure.
struct Constraint {
    std::function<bool(const Vector&)> predicate;
    std::string label;
};

struct OptimizationProblem {
    std::function<double(const Vector&)> objective;
    Direction direction = Direction::Minimize;
    SearchDomain domain;
    std::vector<Constraint> constraints;

    bool feasible(const Vector& x) const {
        for (const auto& c : constraints)
            if (!c.predicate(x)) return false;
        return true;
    }
};

struct Individual {
    Vector genes;
    double fitness = 0.0;
};

struct GaConfig {
    int population_size = 200;
    int generations = 1000;
    double sigma_fraction = 0.05;
    double sigma_growth = 1.5;
    int max_rejections = 20;
    std::uint64_t seed = 0;

    void validate() const {
        if (population_size <= 0 || population_size % 2 != 0)
            throw std::invalid_argument("GaConfig: population_size must be positive and even");
        if (generations <= 0)
            throw std::invalid_argument("GaConfig: generations must be positive");
        if (!(sigma_fraction > 0.0) || !(sigma_fraction < 1.0))
            throw std::invalid_argument("GaConfig: sigma_fraction must be in (0,1)");
        if (!(sigma_growth > 1.0))
            throw std::invalid_argument("GaConfig: sigma_growth must exceed 1");
        if (max_rejections <= 0)
            throw std::invalid_argument("GaConfig: max_rejections must be positive");
    }
};

using Rng = std::mt19937_64;

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

/// Deterministic per-child stream: children may be produced in any order
/// (or in parallel) without changing the result for a fixed seed.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t generation, std::uint64_t index) {
    std::uint64_t s = detail::splitmix64(seed);
    s = detail::splitmix64(s ^ detail::splitmix64(generation + 1));
    s = detail::splitmix64(s ^ detail::splitmix64(index + 1));
    return Rng(s);
}

/// True when a is better than b under the given direction.
inline bool better(double a, double b, Direction dir) {
    return dir == Direction::Minimize ? a < b : a > b;
}

}  // namespace evohab
