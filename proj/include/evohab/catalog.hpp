#pragma once

#include "evohab/cdhs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace evohab::catalog {

struct FileNotFound : EvoError {
    using EvoError::EvoError;
};
struct MalformedHeader : EvoError {
    using EvoError::EvoError;
};
struct MissingField : EvoError {
    using EvoError::EvoError;
};
struct NonPositiveValue : EvoError {
    using EvoError::EvoError;
};

/// Earth mean surface temperature used to normalize Kelvin readings.
inline constexpr double kEarthSurfaceTempK = 288.0;

struct PlanetRecord {
    std::string name;
    std::optional<double> radius_eu;
    std::optional<double> density_eu;
    std::optional<double> escape_velocity_eu;
    std::optional<double> surface_temp_kelvin;
    std::optional<double> surface_temp_eu;
};

struct CatalogReport {
    int loaded = 0;
    std::vector<std::pair<int, std::string>> skipped;  // (1-based data row, reason)
};

/// Header-name to field mapping; defaults follow the PHL exoplanet
/// catalog column names. Empty entries mark a column as absent.
struct ColumnMapping {
    std::string name = "P. Name";
    std::string radius = "P. Radius (EU)";
    std::string density = "P. Density (EU)";
    std::string escape_velocity = "P. Esc Vel (EU)";
    std::string surface_temp_kelvin = "P. Ts Mean (K)";
    std::string surface_temp_eu;  // no EU temperature column by default
};

std::pair<std::vector<PlanetRecord>, CatalogReport> load_catalog(
    const std::string& path, const ColumnMapping& mapping = {});

cdhs::PlanetParams to_planet_params(const PlanetRecord& record,
                                    double earth_temp_k = kEarthSurfaceTempK);

struct Selection {
    std::vector<PlanetRecord> found;  // in query order
    std::vector<std::string> not_found;
};

/// Case-insensitive, whitespace-normalized name match.
Selection select_planets(const std::vector<PlanetRecord>& records,
                         const std::vector<std::string>& names);

}  // namespace evohab::catalog
