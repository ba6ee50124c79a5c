#include "evohab/benchmarks.hpp"
#include "evohab/catalog.hpp"
#include "evohab/cdhs.hpp"
#include "evohab/evo.hpp"
#include "evohab/nsga2.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace evohab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitInfeasible = 4;

constexpr std::uint64_t kDefaultSeed = 20177;

struct CommonOpts {
    int pop = 200;
    int gens = 1000;
    double sigma = 0.05;
    std::uint64_t seed = kDefaultSeed;

    GaConfig config() const {
        GaConfig c;
        c.population_size = pop;
        c.generations = gens;
        c.sigma_fraction = sigma;
        c.seed = seed;
        c.validate();
        return c;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--pop", opts.pop, "Population size (even)");
    cmd->add_option("--gens", opts.gens, "Number of generations");
    cmd->add_option("--sigma", opts.sigma, "Reproduction sigma as a fraction of the domain range");
    cmd->add_option("--seed", opts.seed, "RNG seed")->envname("EVOHAB_SEED");
}

/// Partial runs must never leave truncated files: write to a temp path,
/// then rename into place.
void atomic_write(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << content;
        if (!out) throw std::runtime_error("failed to write " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

json config_json(const GaConfig& c) {
    return json{{"population_size", c.population_size},
                {"generations", c.generations},
                {"sigma_fraction", c.sigma_fraction},
                {"sigma_growth", c.sigma_growth},
                {"max_rejections", c.max_rejections},
                {"seed", c.seed}};
}

void write_manifest(const fs::path& path, const std::string& command, const GaConfig& config,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs, double wall_seconds,
                    const json& results) {
    json manifest{{"command", command},
                  {"config", config_json(config)},
                  {"inputs", inputs},
                  {"outputs", outputs},
                  {"wall_time_s", wall_seconds},
                  {"seed", config.seed},
                  {"results", results}};
    atomic_write(path, manifest.dump(2) + "\n");
}

std::string slugify(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        else if (!out.empty() && out.back() != '-')
            out += '-';
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out;
}

// ---- bench -------------------------------------------------------------

int run_bench(const std::string& name, const CommonOpts& opts, const std::string& out_csv) {
    const GaConfig config = opts.config();

    std::vector<std::string> names;
    if (name == "all") {
        names = benchmarks::single_objective_names();
    } else {
        try {
            benchmarks::lookup_single(name);
        } catch (const benchmarks::UnknownBenchmark& e) {
            std::cerr << e.what() << "\n";
            return kExitUsage;
        }
        names.push_back(name);
    }

    const auto start = std::chrono::steady_clock::now();
    std::printf("%-22s %14s %14s %12s  %s\n", "function", "actual", "obtained", "gap", "status");
    json results = json::array();
    std::string csv = "name,actual,obtained,gap,pass\n";
    int failures = 0;
    for (const auto& n : names) {
        const auto& bench = benchmarks::lookup_single(n);
        const auto result = evo::run(bench.problem, config);
        const double gap = std::abs(result.best.fitness - bench.known_optimum_value);
        const bool pass = gap <= bench.tolerance;
        failures += pass ? 0 : 1;
        std::printf("%-22s %14.6f %14.6f %12.6f  %s\n", n.c_str(), bench.known_optimum_value,
                    result.best.fitness, gap, pass ? "PASS" : "FAIL");
        results.push_back(json{{"name", n},
                               {"actual", bench.known_optimum_value},
                               {"obtained", result.best.fitness},
                               {"gap", gap},
                               {"pass", pass}});
        csv += n + "," + format_double(bench.known_optimum_value) + "," +
               format_double(result.best.fitness) + "," + format_double(gap) + "," +
               (pass ? "true" : "false") + "\n";
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu cases, %d failed\n", names.size(), failures);

    if (!out_csv.empty()) {
        atomic_write(out_csv, csv);
        const fs::path manifest = fs::path(out_csv).replace_extension(".manifest.json");
        write_manifest(manifest, "bench " + name, config, {}, {out_csv}, wall, results);
    }
    return failures == 0 ? kExitOk : kExitTolerance;
}

// ---- mo ----------------------------------------------------------------

std::string front_csv(const std::vector<Vector>& front) {
    std::string csv = "f1,f2\n";
    for (const auto& f : front) csv += format_double(f[0]) + "," + format_double(f[1]) + "\n";
    return csv;
}

int run_mo(const std::string& name, const CommonOpts& opts, const std::string& out_path) {
    const GaConfig config = opts.config();
    const benchmarks::MoBenchmarkCase* mo_case = nullptr;
    try {
        mo_case = &benchmarks::lookup_mo(name);
    } catch (const benchmarks::UnknownBenchmark& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    const auto reference = benchmarks::reference_front(*mo_case);
    const auto result = nsga2::nsga2_run(mo_case->problem, config);

    std::vector<Vector> obtained;
    for (const auto& m : result.front.members) obtained.push_back(m.objectives);
    std::sort(obtained.begin(), obtained.end(),
              [](const Vector& a, const Vector& b) { return a[0] < b[0]; });

    const double igd_value = benchmarks::igd(obtained, reference);
    const bool pass = igd_value <= mo_case->igd_threshold;
    std::printf("%s: front size %zu, IGD %.6f (threshold %g) %s\n", name.c_str(), obtained.size(),
                igd_value, mo_case->igd_threshold, pass ? "PASS" : "FAIL");
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!out_path.empty()) {
        const fs::path out(out_path);
        fs::path ref_path = out;
        ref_path.replace_filename(out.stem().string() + "_ref.csv");
        atomic_write(out, front_csv(obtained));
        atomic_write(ref_path, front_csv(reference));
        const fs::path manifest = fs::path(out).replace_extension(".manifest.json");
        write_manifest(manifest, "mo " + name, config, {}, {out.string(), ref_path.string()},
                       wall,
                       json{{"name", name},
                            {"igd", igd_value},
                            {"threshold", mo_case->igd_threshold},
                            {"front_size", obtained.size()},
                            {"pass", pass}});
    }
    return pass ? kExitOk : kExitTolerance;
}

// ---- cdhs --------------------------------------------------------------

json elasticities_json(const cdhs::Elasticities& e) {
    return json{{"alpha", e.alpha}, {"beta", e.beta}, {"gamma", e.gamma}, {"delta", e.delta}};
}

int run_cdhs(const std::string& catalog_path, const std::vector<std::string>& planets,
             const std::string& mode, double wi, double cmax, const CommonOpts& opts,
             const std::string& out_dir, const std::vector<std::string>& col_overrides) {
    const GaConfig config = opts.config();
    const cdhs::WeightPair weights{wi, 1.0 - wi};
    weights.validate();

    catalog::ColumnMapping mapping;
    for (const auto& kv : col_overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "--col expects key=value, got '" << kv << "'\n";
            return kExitUsage;
        }
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "name") mapping.name = value;
        else if (key == "radius") mapping.radius = value;
        else if (key == "density") mapping.density = value;
        else if (key == "escape_velocity") mapping.escape_velocity = value;
        else if (key == "surface_temp_kelvin") mapping.surface_temp_kelvin = value;
        else if (key == "surface_temp_eu") mapping.surface_temp_eu = value;
        else {
            std::cerr << "unknown column key '" << key << "'\n";
            return kExitUsage;
        }
    }

    std::vector<catalog::PlanetRecord> records;
    try {
        records = catalog::load_catalog(catalog_path, mapping).first;
    } catch (const EvoError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    const auto selection = catalog::select_planets(records, planets);
    if (!selection.not_found.empty()) {
        std::cerr << "planet(s) not found in catalog:";
        for (const auto& n : selection.not_found) std::cerr << " '" << n << "'";
        std::cerr << "\n";
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    std::printf("%-16s %10s %10s %10s  %-9s %-9s %-9s %-9s %s\n", "planet", "Y_i", "Y_s", "Y",
                "alpha", "beta", "gamma", "delta", mode == "bi" ? "C" : "");
    json results = json::array();
    std::vector<std::string> outputs;
    for (const auto& record : selection.found) {
        cdhs::PlanetParams params;
        try {
            params = catalog::to_planet_params(record);
        } catch (const EvoError& e) {
            std::cerr << record.name << ": " << e.what() << "\n";
            return kExitUsage;
        }

        cdhs::CdhsResult result;
        try {
            result = mode == "bi" ? cdhs::optimize_cdhs_bi(params, weights, config, cmax)
                                  : cdhs::optimize_cdhs_single(params, weights, config);
        } catch (const cdhs::InfeasibleCoupling& e) {
            std::cerr << record.name << ": " << e.what() << "\n";
            return kExitInfeasible;
        }

        const auto& e = result.elasticities;
        std::printf("%-16s %10.4f %10.4f %10.4f  %-9.5f %-9.5f %-9.5f %-9.5f", record.name.c_str(),
                    result.interior_score, result.surface_score, result.combined, e.alpha, e.beta,
                    e.gamma, e.delta);
        if (result.coupling_c) std::printf(" %-9.5f", *result.coupling_c);
        std::printf("\n");

        json planet_json{{"planet", record.name},
                         {"interior_score", result.interior_score},
                         {"surface_score", result.surface_score},
                         {"combined", result.combined},
                         {"elasticities", elasticities_json(e)},
                         {"weights", json{{"w_interior", weights.w_interior},
                                          {"w_surface", weights.w_surface}}}};
        if (result.coupling_c) planet_json["coupling_c"] = *result.coupling_c;
        results.push_back(planet_json);

        if (!out_dir.empty()) {
            const std::string slug = slugify(record.name);
            if (mode == "bi" && result.front) {
                std::string csv = "y_interior,y_surface,alpha,beta,gamma,delta,c\n";
                for (const auto& pt : *result.front)
                    csv += format_double(pt.y_interior) + "," + format_double(pt.y_surface) + "," +
                           format_double(pt.elasticities.alpha) + "," +
                           format_double(pt.elasticities.beta) + "," +
                           format_double(pt.elasticities.gamma) + "," +
                           format_double(pt.elasticities.delta) + "," +
                           format_double(pt.coupling_c) + "\n";
                const fs::path front_path = fs::path(out_dir) / (slug + "_front.csv");
                atomic_write(front_path, csv);
                outputs.push_back(front_path.string());

                std::string sweep_csv = "w_interior,combined\n";
                for (const auto& [w, y] : cdhs::weight_sweep(*result.front, 20))
                    sweep_csv += format_double(w) + "," + format_double(y) + "\n";
                const fs::path sweep_path = fs::path(out_dir) / (slug + "_sweep.csv");
                atomic_write(sweep_path, sweep_csv);
                outputs.push_back(sweep_path.string());
            } else {
                const fs::path json_path = fs::path(out_dir) / (slug + "_single.json");
                atomic_write(json_path, planet_json.dump(2) + "\n");
                outputs.push_back(json_path.string());
            }
        }
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!out_dir.empty()) {
        const fs::path manifest = fs::path(out_dir) / ("cdhs_" + mode + ".manifest.json");
        write_manifest(manifest, "cdhs --mode " + mode, config, {catalog_path}, outputs, wall,
                       results);
    }
    return kExitOk;
}

// ---- report ------------------------------------------------------------

int run_report(const std::string& dir) {
    std::vector<fs::path> manifests;
    if (fs::is_directory(dir))
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.path().filename().string().ends_with(".manifest.json"))
                manifests.push_back(entry.path());
    if (manifests.empty()) {
        std::cerr << "no run manifests found in '" << dir << "'\n";
        return kExitUsage;
    }
    std::sort(manifests.begin(), manifests.end());

    std::string md = "# Run report\n";
    for (const auto& path : manifests) {
        std::ifstream in(path);
        json manifest = json::parse(in);
        const std::string command = manifest.value("command", "?");
        md += "\n## " + command + "\n\n";
        md += "seed " + std::to_string(manifest.value("seed", std::uint64_t{0})) + ", pop " +
              std::to_string(manifest["config"].value("population_size", 0)) + ", gens " +
              std::to_string(manifest["config"].value("generations", 0)) + "\n\n";

        const json& results = manifest["results"];
        if (command.starts_with("bench")) {
            md += "| function | actual | obtained | gap | status |\n";
            md += "|---|---|---|---|---|\n";
            for (const auto& row : results)
                md += "| " + row["name"].get<std::string>() + " | " +
                      format_double(row["actual"].get<double>()) + " | " +
                      format_double(row["obtained"].get<double>()) + " | " +
                      format_double(row["gap"].get<double>()) + " | " +
                      (row["pass"].get<bool>() ? "pass" : "fail") + " |\n";
        } else if (command.starts_with("mo")) {
            md += "| problem | IGD | threshold | front size | status |\n";
            md += "|---|---|---|---|---|\n";
            md += "| " + results["name"].get<std::string>() + " | " +
                  format_double(results["igd"].get<double>()) + " | " +
                  format_double(results["threshold"].get<double>()) + " | " +
                  std::to_string(results["front_size"].get<std::size_t>()) + " | " +
                  (results["pass"].get<bool>() ? "pass" : "fail") + " |\n";
        } else if (command.starts_with("cdhs")) {
            md += "| planet | Y_i | Y_s | Y |\n";
            md += "|---|---|---|---|\n";
            for (const auto& row : results)
                md += "| " + row["planet"].get<std::string>() + " | " +
                      format_double(row["interior_score"].get<double>()) + " | " +
                      format_double(row["surface_score"].get<double>()) + " | " +
                      format_double(row["combined"].get<double>()) + " |\n";
        }
    }

    atomic_write(fs::path(dir) / "report.md", md);
    std::printf("wrote %s (%zu runs)\n", (fs::path(dir) / "report.md").string().c_str(),
                manifests.size());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evolutionary optimization toolkit with Cobb-Douglas habitability scoring"};
    app.require_subcommand(1);

    // bench
    std::string bench_name;
    CommonOpts bench_opts;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Run single-objective benchmark functions");
    bench->add_option("function", bench_name, "Benchmark name or 'all'")->required();
    add_common(bench, bench_opts);
    bench->add_option("--out", bench_out, "CSV output path");

    // mo
    std::string mo_name;
    CommonOpts mo_opts;
    std::string mo_out;
    auto* mo = app.add_subcommand("mo", "Run a multi-objective benchmark");
    mo->add_option("problem", mo_name, "Multi-objective benchmark name")->required();
    add_common(mo, mo_opts);
    mo->add_option("--out", mo_out, "Obtained-front CSV output path");

    // cdhs
    std::string cdhs_catalog, cdhs_mode = "bi", cdhs_out;
    std::vector<std::string> cdhs_planets, cdhs_cols;
    double cdhs_wi = 0.5, cdhs_cmax = cdhs::kDefaultCouplingMax;
    CommonOpts cdhs_opts;
    auto* cdhs_cmd = app.add_subcommand("cdhs", "Cobb-Douglas habitability scores for planets");
    cdhs_cmd->add_option("--catalog", cdhs_catalog, "Catalog CSV path")->required();
    cdhs_cmd->add_option("--planet", cdhs_planets, "Planet name (repeatable)")->required();
    cdhs_cmd->add_option("--mode", cdhs_mode, "bi or single")
        ->check(CLI::IsMember({"bi", "single"}));
    cdhs_cmd->add_option("--wi", cdhs_wi, "Interior score weight in [0,1]");
    cdhs_cmd->add_option("--cmax", cdhs_cmax, "Upper bound for the coupling variable C");
    cdhs_cmd->add_option("--col", cdhs_cols, "Column mapping override key=value (repeatable)");
    add_common(cdhs_cmd, cdhs_opts);
    cdhs_cmd->add_option("--out", cdhs_out, "Output directory for artifacts");

    // report
    std::string report_dir;
    auto* report = app.add_subcommand("report", "Consolidate stored run manifests into one report");
    report->add_option("--out", report_dir, "Directory holding prior run artifacts")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bench->parsed()) return run_bench(bench_name, bench_opts, bench_out);
        if (mo->parsed()) return run_mo(mo_name, mo_opts, mo_out);
        if (cdhs_cmd->parsed())
            return run_cdhs(cdhs_catalog, cdhs_planets, cdhs_mode, cdhs_wi, cdhs_cmax, cdhs_opts,
                            cdhs_out, cdhs_cols);
        if (report->parsed()) return run_report(report_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
