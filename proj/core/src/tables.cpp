#include "helioweed/tables.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "helioweed/errors.hpp"

namespace helioweed::io {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

struct CsvReader {
    std::string path;
    std::ifstream in;
    int row = 0;

    explicit CsvReader(const std::string& p) : path(p), in(p) {
        if (!in) throw ValidationError("cannot open " + p);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ValidationError(path + " row " + std::to_string(row) + ": " + what);
    }

    void expect_header(const std::string& header) {
        std::string line;
        if (!std::getline(in, line)) throw ValidationError(path + ": empty file");
        row = 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line != header)
            fail("header must be exactly '" + header + "', got '" + line + "'");
    }

    bool next(std::vector<std::string>& fields, size_t expected) {
        std::string line;
        while (std::getline(in, line)) {
            ++row;
            if (line.empty() || line == "\r") continue;
            fields = split_row(line);
            if (fields.size() != expected)
                fail("expected " + std::to_string(expected) + " fields, got " +
                     std::to_string(fields.size()));
            return true;
        }
        return false;
    }

    double number(const std::string& text, const std::string& field) const {
        size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(text, &used);
        } catch (const std::exception&) {
            fail(field + ": '" + text + "' is not a number");
        }
        if (used != text.size()) fail(field + ": '" + text + "' is not a number");
        return value;
    }

    int integer(const std::string& text, const std::string& field) const {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(text, &used);
        } catch (const std::exception&) {
            fail(field + ": '" + text + "' is not an integer");
        }
        if (used != text.size()) fail(field + ": '" + text + "' is not an integer");
        return value;
    }
};

void put(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    out << buf;
}

}  // namespace

std::map<std::string, dose::WeedSpecies> load_species_csv(const std::string& path) {
    CsvReader reader(path);
    reader.expect_header(
        "name,reference_exposure_s,reference_flux_wm2,stage_multiplier_established");
    std::map<std::string, dose::WeedSpecies> table;
    std::vector<std::string> f;
    while (reader.next(f, 4)) {
        dose::WeedSpecies sp{f[0], reader.number(f[1], "reference_exposure_s"),
                             reader.number(f[2], "reference_flux_wm2"),
                             reader.number(f[3], "stage_multiplier_established")};
        try {
            sp.validate();
        } catch (const ValidationError& e) {
            reader.fail(e.what());
        }
        if (!table.emplace(sp.name, sp).second)
            reader.fail("duplicate species name '" + sp.name + "'");
    }
    if (table.empty()) throw ValidationError(path + ": no species rows");
    return table;
}

std::vector<field::WeedTarget> load_targets_csv(const std::string& path,
                                                const field::FieldMap* boundary) {
    CsvReader reader(path);
    reader.expect_header("id,x_m,y_m,species,detected_day");
    std::vector<field::WeedTarget> targets;
    std::vector<std::string> f;
    while (reader.next(f, 5)) {
        field::WeedTarget t{f[0], reader.number(f[1], "x_m"), reader.number(f[2], "y_m"),
                            f[3], reader.integer(f[4], "detected_day")};
        if (boundary) {
            try {
                t.validate(*boundary);
            } catch (const ValidationError& e) {
                reader.fail(e.what());
            }
        }
        targets.push_back(std::move(t));
    }
    return targets;
}

dose::DniProfile load_dni_profile_csv(const std::string& path) {
    CsvReader reader(path);
    reader.expect_header("solar_time_h,dni_wm2");
    std::vector<std::pair<double, double>> points;
    std::vector<std::string> f;
    while (reader.next(f, 2))
        points.emplace_back(reader.number(f[0], "solar_time_h"),
                            reader.number(f[1], "dni_wm2"));
    try {
        return dose::DniProfile::from_points(std::move(points));
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_window_surface_csv(std::ostream& out,
                              const std::vector<solar::SurfacePoint>& grid) {
    out << "phi_deg,delta_deg,delta_t_hours\n";
    for (const auto& p : grid) {
        put(out, p.phi_deg);
        out << ',';
        put(out, p.delta_deg);
        out << ',';
        put(out, p.delta_t_hours);
        out << '\n';
    }
}

void write_efficiency_curve_csv(std::ostream& out,
                                const std::vector<optics::EfficiencySample>& curve) {
    out << "theta_i_deg,transmittance,concentration,cosine,eta,eta_normalized\n";
    for (const auto& s : curve) {
        put(out, s.theta_i_deg);
        out << ',';
        put(out, s.transmittance);
        out << ',';
        put(out, s.concentration);
        out << ',';
        put(out, s.cosine_factor);
        out << ',';
        put(out, s.eta);
        out << ',';
        put(out, s.eta_normalized);
        out << '\n';
    }
}

void write_coverage_surface_csv(std::ostream& out,
                                const std::vector<coverage::CoveragePoint>& grid) {
    out << "area_m2,speed_mps,total_time_hours\n";
    for (const auto& p : grid) {
        put(out, p.area_m2);
        out << ',';
        put(out, p.speed_mps);
        out << ',';
        put(out, p.total_time_hours);
        out << '\n';
    }
}

}  // namespace helioweed::io
