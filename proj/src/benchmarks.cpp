#include "evohab/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace evohab::benchmarks {

namespace {

constexpr double kPi = std::numbers::pi;

Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

struct Registry {
    std::map<std::string, AnyCase> cases;
    std::vector<std::string> unconstrained;
    std::vector<std::string> constrained;
    std::vector<std::string> single;
    std::vector<std::string> mo;

    void add_single(BenchmarkCase c, bool has_constraints) {
        (has_constraints ? constrained : unconstrained).push_back(c.name);
        single.push_back(c.name);
        cases.emplace(c.name, std::move(c));
    }
    void add_mo(MoBenchmarkCase c) {
        mo.push_back(c.name);
        cases.emplace(c.name, std::move(c));
    }
};

Registry build_registry() {
    Registry r;
    using F = std::function<double(const Vector&)>;

    auto single = [&](std::string name, F f, SearchDomain dom, double optimum, double tol,
                      std::optional<Vector> loc, std::vector<Constraint> cons = {}) {
        const bool has_cons = !cons.empty();
        BenchmarkCase c{std::move(name),
                        {std::move(f), Direction::Minimize, std::move(dom), std::move(cons)},
                        optimum,
                        tol,
                        std::move(loc)};
        r.add_single(std::move(c), has_cons);
    };

    // ---- unconstrained -------------------------------------------------

    single(
        "easom",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            return -std::cos(x) * std::cos(y) *
                   std::exp(-((x - kPi) * (x - kPi) + (y - kPi) * (y - kPi)));
        },
        {2, -100.0, 100.0}, -1.0, 1e-2, vec2(kPi, kPi));

    single(
        "rastrigin",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            return 20.0 + x * x + y * y -
                   10.0 * (std::cos(2.0 * kPi * x) + std::cos(2.0 * kPi * y));
        },
        {2, -5.12, 5.12}, 0.0, 1e-2, vec2(0.0, 0.0));

    single(
        "ackley",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            return -20.0 * std::exp(-0.2 * std::sqrt(0.5 * (x * x + y * y))) -
                   std::exp(0.5 * (std::cos(2.0 * kPi * x) + std::cos(2.0 * kPi * y))) +
                   std::numbers::e + 20.0;
        },
        {2, -5.0, 5.0}, 0.0, 2e-2, vec2(0.0, 0.0));

    single(
        "beale",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            const double a = 1.5 - x + x * y;
            const double b = 2.25 - x + x * y * y;
            const double c = 2.625 - x + x * y * y * y;
            return a * a + b * b + c * c;
        },
        {2, -4.5, 4.5}, 0.0, 1e-2, vec2(3.0, 0.5));

    single(
        "goldstein-price",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            const double t1 = 1.0 + (x + y + 1.0) * (x + y + 1.0) *
                                        (19.0 - 14.0 * x + 3.0 * x * x - 14.0 * y +
                                         6.0 * x * y + 3.0 * y * y);
            const double t2 = 30.0 + (2.0 * x - 3.0 * y) * (2.0 * x - 3.0 * y) *
                                         (18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y -
                                          36.0 * x * y + 27.0 * y * y);
            return t1 * t2;
        },
        {2, -2.0, 2.0}, 3.0, 1e-2, vec2(0.0, -1.0));

    // Variant pinned to reproduce a -0.1999 global minimum; the more common
    // |sin| form of this function family bottoms out at -0.1777 instead.
    single(
        "mishra4",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            return std::sqrt(std::abs(std::cos(std::sqrt(x * x + y * y)))) + 0.01 * (x + y);
        },
        {2, -10.0, 10.0}, -0.19992970874179772, 1e-2,
        vec2(-9.996486610856323, -9.996486610856323));

    single(
        "cross-in-tray",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            const double inner = std::abs(std::sin(x) * std::sin(y) *
                                          std::exp(std::abs(100.0 - std::hypot(x, y) / kPi)));
            return -0.0001 * std::pow(inner + 1.0, 0.1);
        },
        {2, -10.0, 10.0}, -2.062611870822739, 1e-2,
        vec2(1.349406608602084, 1.349406608602084));

    single(
        "eggholder",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            return -(y + 47.0) * std::sin(std::sqrt(std::abs(x / 2.0 + y + 47.0))) -
                   x * std::sin(std::sqrt(std::abs(x - (y + 47.0))));
        },
        {2, -512.0, 512.0}, -959.6406627208503, 1.0, vec2(512.0, 404.2318058097505));

    single(
        "holder-table",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            return -std::abs(std::sin(x) * std::cos(y) *
                             std::exp(std::abs(1.0 - std::hypot(x, y) / kPi)));
        },
        {2, -10.0, 10.0}, -19.20850256788675, 1e-2,
        vec2(8.055023472141116, 9.664590028909654));

    single(
        "mccormick",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            return std::sin(x + y) + (x - y) * (x - y) - 1.5 * x + 2.5 * y + 1.0;
        },
        SearchDomain(vec2(-1.5, -3.0), vec2(4.0, 4.0)), -1.9132229549810367, 1e-2,
        vec2(0.5 - kPi / 3.0, -0.5 - kPi / 3.0));

    single(
        "schaffer4",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            const double c = std::cos(std::sin(std::abs(x * x - y * y)));
            const double den = 1.0 + 0.001 * (x * x + y * y);
            return 0.5 + (c * c - 0.5) / (den * den);
        },
        {2, -100.0, 100.0}, 0.29257863203598056, 1e-2, vec2(0.0, 1.253131828792882));

    // ---- constrained ---------------------------------------------------

    auto rosenbrock = [](const Vector& v) {
        const double x = v[0], y = v[1];
        return (1.0 - x) * (1.0 - x) + 100.0 * (y - x * x) * (y - x * x);
    };

    single("rosenbrock-cubic-line", rosenbrock, SearchDomain(vec2(-1.5, -0.5), vec2(1.5, 2.5)),
           0.0, 1e-2, vec2(1.0, 1.0),
           {{[](const Vector& v) {
                 const double x = v[0], y = v[1];
                 return (x - 1.0) * (x - 1.0) * (x - 1.0) - y + 1.0 <= 0.0;
             },
             "(x-1)^3 - y + 1 <= 0"},
            {[](const Vector& v) { return v[0] + v[1] - 2.0 <= 0.0; }, "x + y <= 2"}});

    single("rosenbrock-disk", rosenbrock, {2, -1.5, 1.5}, 0.0, 1e-2, vec2(1.0, 1.0),
           {{[](const Vector& v) { return v.squaredNorm() <= 2.0; }, "x^2 + y^2 <= 2"}});

    single(
        "mishra-bird",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            const double a = 1.0 - std::cos(x);
            const double b = 1.0 - std::sin(y);
            return std::sin(y) * std::exp(a * a) + std::cos(x) * std::exp(b * b) +
                   (x - y) * (x - y);
        },
        SearchDomain(vec2(-10.0, -6.5), vec2(0.0, 0.0)), -106.76453674926462, 0.05,
        vec2(-3.1302468, -1.5821422),
        {{[](const Vector& v) {
              const double x = v[0], y = v[1];
              return (x + 5.0) * (x + 5.0) + (y + 5.0) * (y + 5.0) < 25.0;
          },
          "(x+5)^2 + (y+5)^2 < 25"}});

    single(
        "townsend",
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            const double c = std::cos((x - 0.1) * y);
            return -c * c - x * std::sin(3.0 * x + y);
        },
        SearchDomain(vec2(-2.25, -2.5), vec2(2.5, 1.75)), -2.0239883049799365, 1e-2,
        vec2(2.0052938, 1.1944509),
        {{[](const Vector& v) {
              const double x = v[0], y = v[1];
              const double t = std::atan2(x, y);
              const double rad = 2.0 * std::cos(t) - 0.5 * std::cos(2.0 * t) -
                                 0.25 * std::cos(3.0 * t) - 0.125 * std::cos(4.0 * t);
              const double sin_t = 2.0 * std::sin(t);
              return x * x + y * y < rad * rad + sin_t * sin_t;
          },
          "heart-shaped feasible region"}});

    single(
        "simionescu", [](const Vector& v) { return 0.1 * v[0] * v[1]; }, {2, -1.25, 1.25},
        -0.07200000000000001, 1e-2, vec2(0.848528137423857, -0.848528137423857),
        {{[](const Vector& v) {
              const double x = v[0], y = v[1];
              if (x == 0.0 && y == 0.0) return true;
              const double rad = 1.0 + 0.2 * std::cos(8.0 * std::atan(x / y));
              return x * x + y * y <= rad * rad;
          },
          "x^2 + y^2 <= (1 + 0.2 cos(8 atan(x/y)))^2"}});

    // ---- multi-objective (all minimize) --------------------------------

    auto mo = [&](std::string name, std::vector<F> fs, SearchDomain dom,
                  std::vector<Constraint> cons, double igd_threshold) {
        const auto k = fs.size();
        MoBenchmarkCase c{std::move(name),
                          {std::move(fs), std::vector<Direction>(k, Direction::Minimize),
                           std::move(dom), std::move(cons)},
                          1000,
                          igd_threshold};
        r.add_mo(std::move(c));
    };

    mo("poloni",
       {[](const Vector& v) {
            const double x = v[0], y = v[1];
            const double a1 = 0.5 * std::sin(1.0) - 2.0 * std::cos(1.0) + std::sin(2.0) -
                              1.5 * std::cos(2.0);
            const double a2 = 1.5 * std::sin(1.0) - std::cos(1.0) + 2.0 * std::sin(2.0) -
                              0.5 * std::cos(2.0);
            const double b1 =
                0.5 * std::sin(x) - 2.0 * std::cos(x) + std::sin(y) - 1.5 * std::cos(y);
            const double b2 =
                1.5 * std::sin(x) - std::cos(x) + 2.0 * std::sin(y) - 0.5 * std::cos(y);
            return 1.0 + (a1 - b1) * (a1 - b1) + (a2 - b2) * (a2 - b2);
        },
        [](const Vector& v) {
            const double x = v[0], y = v[1];
            return (x + 3.0) * (x + 3.0) + (y + 1.0) * (y + 1.0);
        }},
       {2, -kPi, kPi}, {}, 0.5);

    mo("schaffer1",
       {[](const Vector& v) { return v[0] * v[0]; },
        [](const Vector& v) { return (v[0] - 2.0) * (v[0] - 2.0); }},
       {1, -10.0, 10.0}, {}, 0.05);

    // Two-constraint instance of this constrained test family.
    mo("ctp1",
       {[](const Vector& v) { return v[0]; },
        [](const Vector& v) { return (1.0 + v[1]) * std::exp(-v[0] / (1.0 + v[1])); }},
       {2, 0.0, 1.0},
       {{[](const Vector& v) {
             const double f1 = v[0];
             const double f2 = (1.0 + v[1]) * std::exp(-v[0] / (1.0 + v[1]));
             return f2 >= 0.858 * std::exp(-0.541 * f1);
         },
         "f2 >= 0.858 exp(-0.541 f1)"},
        {[](const Vector& v) {
             const double f1 = v[0];
             const double f2 = (1.0 + v[1]) * std::exp(-v[0] / (1.0 + v[1]));
             return f2 >= 0.728 * std::exp(-0.295 * f1);
         },
         "f2 >= 0.728 exp(-0.295 f1)"}},
       0.05);

    mo("constr-ex",
       {[](const Vector& v) { return v[0]; },
        [](const Vector& v) { return (1.0 + v[1]) / v[0]; }},
       SearchDomain(vec2(0.1, 0.0), vec2(1.0, 5.0)),
       {{[](const Vector& v) { return v[1] + 9.0 * v[0] >= 6.0; }, "x2 + 9 x1 >= 6"},
        {[](const Vector& v) { return -v[1] + 9.0 * v[0] >= 1.0; }, "-x2 + 9 x1 >= 1"}},
       0.05);

    mo("binh-korn",
       {[](const Vector& v) { return 4.0 * v[0] * v[0] + 4.0 * v[1] * v[1]; },
        [](const Vector& v) {
            return (v[0] - 5.0) * (v[0] - 5.0) + (v[1] - 5.0) * (v[1] - 5.0);
        }},
       SearchDomain(vec2(0.0, 0.0), vec2(5.0, 3.0)),
       {{[](const Vector& v) {
             return (v[0] - 5.0) * (v[0] - 5.0) + v[1] * v[1] <= 25.0;
         },
         "(x-5)^2 + y^2 <= 25"},
        {[](const Vector& v) {
             return (v[0] - 8.0) * (v[0] - 8.0) + (v[1] + 3.0) * (v[1] + 3.0) >= 7.7;
         },
         "(x-8)^2 + (y+3)^2 >= 7.7"}},
       1.0);

    mo("chakong-haimes",
       {[](const Vector& v) {
            return 2.0 + (v[0] - 2.0) * (v[0] - 2.0) + (v[1] - 1.0) * (v[1] - 1.0);
        },
        [](const Vector& v) { return 9.0 * v[0] - (v[1] - 1.0) * (v[1] - 1.0); }},
       {2, -20.0, 20.0},
       {{[](const Vector& v) { return v.squaredNorm() <= 225.0; }, "x^2 + y^2 <= 225"},
        {[](const Vector& v) { return v[0] - 3.0 * v[1] + 10.0 <= 0.0; }, "x - 3y + 10 <= 0"}},
       1.0);

    return r;
}

const Registry& registry() {
    static const Registry r = build_registry();
    return r;
}

}  // namespace

const AnyCase& lookup(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.cases.find(name);
    if (it == reg.cases.end()) {
        std::ostringstream msg;
        msg << "unknown benchmark '" << name << "'; valid names:";
        for (const auto& [key, value] : reg.cases) msg << ' ' << key;
        throw UnknownBenchmark(msg.str());
    }
    return it->second;
}

const BenchmarkCase& lookup_single(const std::string& name) {
    const auto& c = lookup(name);
    if (const auto* p = std::get_if<BenchmarkCase>(&c)) return *p;
    throw UnknownBenchmark("'" + name + "' is a multi-objective benchmark");
}

const MoBenchmarkCase& lookup_mo(const std::string& name) {
    const auto& c = lookup(name);
    if (const auto* p = std::get_if<MoBenchmarkCase>(&c)) return *p;
    throw UnknownBenchmark("'" + name + "' is a single-objective benchmark");
}

const std::vector<std::string>& single_objective_names() { return registry().single; }
const std::vector<std::string>& unconstrained_names() { return registry().unconstrained; }
const std::vector<std::string>& constrained_names() { return registry().constrained; }
const std::vector<std::string>& mo_names() { return registry().mo; }

double evaluate_at_optimum(const BenchmarkCase& c) {
    if (!c.known_optimum_location)
        throw NoKnownLocation("benchmark '" + c.name + "' has no known optimum location");
    return c.problem.objective(*c.known_optimum_location);
}

std::vector<Vector> reference_front(const MoBenchmarkCase& c) {
    const auto& problem = c.problem;
    const auto dims = problem.domain.dims();
    const int res = c.reference_front_resolution;
    const Vector range = problem.domain.range();

    std::vector<Vector> feasible;
    Vector x(dims);
    const long total = static_cast<long>(std::pow(static_cast<double>(res), dims));
    for (long idx = 0; idx < total; ++idx) {
        long rem = idx;
        for (Eigen::Index d = 0; d < dims; ++d) {
            const long step = rem % res;
            rem /= res;
            x[d] = problem.domain.lower[d] + range[d] * static_cast<double>(step) / (res - 1);
        }
        if (problem.feasible(x)) feasible.push_back(problem.evaluate(x));
    }

    // Bi-objective sweep: sort in minimization space, keep the staircase.
    std::vector<double> sign(problem.directions.size());
    for (std::size_t i = 0; i < sign.size(); ++i)
        sign[i] = problem.directions[i] == Direction::Minimize ? 1.0 : -1.0;
    std::sort(feasible.begin(), feasible.end(), [&](const Vector& a, const Vector& b) {
        if (sign[0] * a[0] != sign[0] * b[0]) return sign[0] * a[0] < sign[0] * b[0];
        return sign[1] * a[1] < sign[1] * b[1];
    });

    std::vector<Vector> front;
    double best_f2 = std::numeric_limits<double>::infinity();
    for (const auto& f : feasible) {
        if (sign[1] * f[1] < best_f2) {
            best_f2 = sign[1] * f[1];
            front.push_back(f);
        }
    }
    return front;
}

double igd(const std::vector<Vector>& obtained, const std::vector<Vector>& reference) {
    if (obtained.empty() || reference.empty())
        throw EmptySet("igd requires non-empty obtained and reference sets");
    double total = 0.0;
    for (const auto& ref : reference) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& got : obtained) nearest = std::min(nearest, (ref - got).norm());
        total += nearest;
    }
    return total / static_cast<double>(reference.size());
}

}  // namespace evohab::benchmarks
