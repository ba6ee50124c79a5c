#include "evohab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace evohab::catalog {

namespace {

// RFC-4180 style field split with double-quote escaping.
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t");
    auto end = s.find_last_not_of(" \t");
    return begin == std::string::npos ? std::string{} : s.substr(begin, end - begin + 1);
}

std::string normalize_name(const std::string& s) {
    std::string out;
    bool pending_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out += ' ';
            pending_space = false;
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    return out;
}

std::optional<double> parse_number(const std::string& raw, const std::string& field,
                                   std::string& error) {
    const std::string s = trim(raw);
    if (s.empty()) return std::nullopt;  // absent optional field
    try {
        std::size_t consumed = 0;
        const double value = std::stod(s, &consumed);
        if (consumed != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        error = "unparseable " + field;
        return std::nullopt;
    }
}

}  // namespace

std::pair<std::vector<PlanetRecord>, CatalogReport> load_catalog(const std::string& path,
                                                                 const ColumnMapping& mapping) {
    std::ifstream in(path);
    if (!in) throw FileNotFound("cannot open catalog file: " + path);

    std::string header_line;
    if (!std::getline(in, header_line)) throw MalformedHeader("catalog file has no header row");
    const auto header = split_csv_line(header_line);

    auto column_of = [&](const std::string& wanted) -> std::optional<int> {
        if (wanted.empty()) return std::nullopt;
        for (std::size_t i = 0; i < header.size(); ++i)
            if (trim(header[i]) == wanted) return static_cast<int>(i);
        return std::nullopt;
    };

    const auto name_col = column_of(mapping.name);
    if (!name_col) throw MalformedHeader("mandatory name column '" + mapping.name + "' absent");
    const auto radius_col = column_of(mapping.radius);
    const auto density_col = column_of(mapping.density);
    const auto esc_col = column_of(mapping.escape_velocity);
    const auto ts_k_col = column_of(mapping.surface_temp_kelvin);
    const auto ts_eu_col = column_of(mapping.surface_temp_eu);

    std::vector<PlanetRecord> records;
    CatalogReport report;
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        auto at = [&](const std::optional<int>& col) -> std::string {
            if (!col || *col >= static_cast<int>(fields.size())) return {};
            return fields[*col];
        };

        PlanetRecord record;
        record.name = trim(at(name_col));
        if (record.name.empty()) {
            report.skipped.emplace_back(row, "missing name");
            continue;
        }

        std::string error;
        record.radius_eu = parse_number(at(radius_col), "radius", error);
        if (error.empty()) record.density_eu = parse_number(at(density_col), "density", error);
        if (error.empty())
            record.escape_velocity_eu = parse_number(at(esc_col), "escape velocity", error);
        if (error.empty())
            record.surface_temp_kelvin = parse_number(at(ts_k_col), "surface temperature", error);
        if (error.empty())
            record.surface_temp_eu = parse_number(at(ts_eu_col), "surface temperature", error);
        if (!error.empty()) {
            report.skipped.emplace_back(row, error);
            continue;
        }

        records.push_back(std::move(record));
        ++report.loaded;
    }
    return {std::move(records), std::move(report)};
}

cdhs::PlanetParams to_planet_params(const PlanetRecord& record, double earth_temp_k) {
    auto require = [&](const std::optional<double>& field, const char* label) {
        if (!field) throw MissingField(std::string("missing field: ") + label);
        if (!(*field > 0.0))
            throw NonPositiveValue(std::string("non-positive value for field: ") + label);
        return *field;
    };

    cdhs::PlanetParams p;
    p.radius = require(record.radius_eu, "radius");
    p.density = require(record.density_eu, "density");
    p.escape_velocity = require(record.escape_velocity_eu, "escape velocity");
    if (record.surface_temp_eu) {
        p.surface_temp = require(record.surface_temp_eu, "surface temperature (EU)");
    } else {
        p.surface_temp = require(record.surface_temp_kelvin, "surface temperature") / earth_temp_k;
    }
    p.validate();
    return p;
}

Selection select_planets(const std::vector<PlanetRecord>& records,
                         const std::vector<std::string>& names) {
    Selection selection;
    for (const auto& query : names) {
        const std::string key = normalize_name(query);
        auto it = std::find_if(records.begin(), records.end(), [&](const PlanetRecord& r) {
            return normalize_name(r.name) == key;
        });
        if (it != records.end())
            selection.found.push_back(*it);
        else
            selection.not_found.push_back(query);
    }
    return selection;
}

}  // namespace evohab::catalog
