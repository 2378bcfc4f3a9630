#include "helioweed/config.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "helioweed/tables.hpp"

namespace helioweed::io {

namespace {

std::string trim(const std::string& s) {
    const size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

class IniFile {
public:
    explicit IniFile(const std::string& path) : path_(path) {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open " + path);
        std::string line, section;
        int row = 0;
        while (std::getline(in, line)) {
            ++row;
            const std::string t = trim(line);
            if (t.empty() || t[0] == '#' || t[0] == ';') continue;
            if (t.front() == '[' && t.back() == ']') {
                section = trim(t.substr(1, t.size() - 2));
                if (section.empty())
                    throw ValidationError(path + " line " + std::to_string(row) +
                                          ": empty section name");
                continue;
            }
            const size_t eq = t.find('=');
            if (eq == std::string::npos)
                throw ValidationError(path + " line " + std::to_string(row) +
                                      ": expected key = value");
            if (section.empty())
                throw ValidationError(path + " line " + std::to_string(row) +
                                      ": key before any [section]");
            const std::string key = trim(t.substr(0, eq));
            const std::string value = trim(t.substr(eq + 1));
            if (key.empty())
                throw ValidationError(path + " line " + std::to_string(row) +
                                      ": empty key");
            if (!values_.emplace(section + "." + key, value).second)
                throw ValidationError(path + " line " + std::to_string(row) +
                                      ": duplicate key " + section + "." + key);
        }
    }

    bool has(const std::string& name) const { return values_.count(name) > 0; }

    std::string get(const std::string& name) {
        const auto it = values_.find(name);
        if (it == values_.end())
            throw ValidationError(path_ + ": missing required key " + name);
        consumed_.insert(name);
        return it->second;
    }

    std::string get_or(const std::string& name, const std::string& fallback) {
        return has(name) ? get(name) : fallback;
    }

    double number(const std::string& name) {
        const std::string text = get(name);
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != text.size())
            throw ValidationError(path_ + ": " + name + " = '" + text +
                                  "' is not a number");
        return v;
    }

    double number_or(const std::string& name, double fallback) {
        return has(name) ? number(name) : fallback;
    }

    int integer(const std::string& name) {
        const std::string text = get(name);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(text, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != text.size())
            throw ValidationError(path_ + ": " + name + " = '" + text +
                                  "' is not an integer");
        return v;
    }

    int integer_or(const std::string& name, int fallback) {
        return has(name) ? integer(name) : fallback;
    }

    void reject_unconsumed() const {
        for (const auto& [name, value] : values_)
            if (!consumed_.count(name))
                throw ValidationError(path_ + ": unknown key " + name);
    }

private:
    std::string path_;
    std::map<std::string, std::string> values_;
    std::set<std::string> consumed_;
};

}  // namespace

MissionConfig MissionConfig::load(const std::string& path) {
    IniFile ini(path);
    const std::filesystem::path base = std::filesystem::path(path).parent_path();

    MissionConfig cfg;
    plan::Scenario& sc = cfg.scenario;

    sc.site_latitude_deg = ini.number("site.latitude_deg");
    sc.theta_max_deg = ini.number_or("site.theta_max_deg", 25.0);
    sc.mapping_daylight_zenith_deg = ini.number_or("site.mapping_daylight_zenith_deg", 85.0);

    sc.lens.aperture_width_m = ini.number("lens.aperture_width_m");
    sc.lens.focal_length_m = ini.number("lens.focal_length_m");
    sc.lens.refractive_index = ini.number("lens.refractive_index");
    sc.lens.nominal_transmittance = ini.number("lens.nominal_transmittance");
    sc.lens.peak_concentration = ini.number("lens.peak_concentration");
    sc.lens.concentration_model = ini.get_or("lens.concentration_model", "cosine");

    sc.footprint.along_track_m = ini.number("footprint.along_track_m");
    sc.footprint.cross_track_m = ini.number("footprint.cross_track_m");

    sc.field_map.origin_x_m = ini.number_or("field.origin_x_m", 0.0);
    sc.field_map.origin_y_m = ini.number_or("field.origin_y_m", 0.0);
    sc.field_map.width_m = ini.number("field.width_m");
    sc.field_map.height_m = ini.number("field.height_m");
    sc.field_map.row_spacing_m = ini.number("field.row_spacing_m");
    const std::string axis = ini.get_or("field.row_axis", "x");
    if (axis != "x" && axis != "y")
        throw ValidationError(path + ": field.row_axis must be 'x' or 'y'");
    sc.field_map.row_axis = axis[0];

    sc.ugv.transit_speed_mps = ini.number("ugv.transit_speed_mps");
    sc.ugv.turn_time_s = ini.number_or("ugv.turn_time_s", 0.0);
    sc.ugv.start_x_m = ini.number_or("ugv.start_x_m", sc.field_map.origin_x_m);
    sc.ugv.start_y_m = ini.number_or("ugv.start_y_m", sc.field_map.origin_y_m);

    const double dni = ini.number_or("dose.dni_wm2", 900.0);
    sc.max_dwell_s = ini.number_or("dose.max_dwell_s", dose::kDefaultMaxDwellS);
    sc.target_stage = dose::stage_from_string(ini.get_or("dose.target_stage", "seedling"));

    sc.t_day_hours = ini.number_or("coverage.t_day_hours", 3.5);
    cfg.area_min_ha = ini.number_or("coverage.area_min_ha", 0.1);
    cfg.area_max_ha = ini.number_or("coverage.area_max_ha", 0.5);
    cfg.surface_grid_points = ini.integer_or("coverage.surface_grid_points", 9);

    sc.start_day_of_year = ini.integer("mission.start_day_of_year");
    sc.horizon_days = ini.integer("mission.horizon_days");
    if (ini.has("mission.compensate_tracking")) {
        const std::string v = ini.get("mission.compensate_tracking");
        if (v != "true" && v != "false")
            throw ValidationError(path + ": mission.compensate_tracking must be true|false");
        sc.compensate_tracking = (v == "true");
    }

    cfg.species_csv_path = (base / ini.get("files.species_csv")).string();
    sc.species = load_species_csv(cfg.species_csv_path);

    if (ini.has("files.dni_profile_csv")) {
        cfg.dni_profile_csv_path = (base / ini.get("files.dni_profile_csv")).string();
        sc.dni = load_dni_profile_csv(cfg.dni_profile_csv_path);
    } else {
        sc.dni = dose::DniProfile::constant(dni);
    }

    ini.reject_unconsumed();
    sc.validate();
    if (!(cfg.area_min_ha > 0.0 && cfg.area_max_ha >= cfg.area_min_ha))
        throw ValidationError(path + ": coverage area range must be positive and ordered");
    if (cfg.surface_grid_points < 2)
        throw ValidationError(path + ": coverage.surface_grid_points must be >= 2");
    return cfg;
}

}  // namespace helioweed::io
