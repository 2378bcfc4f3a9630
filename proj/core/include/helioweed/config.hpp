#ifndef HELIOWEED_CONFIG_HPP
#define HELIOWEED_CONFIG_HPP

#include <string>

#include "helioweed/planner.hpp"

namespace helioweed::io {

/* One scenario file: flat key = value pairs under [section] headers, all
   referenced files resolved relative to the config file's directory.
   Every key is listed in the shipped data/demo.ini; unknown keys are
   rejected so typos cannot silently fall back to defaults. */
struct MissionConfig {
    plan::Scenario scenario;
    std::string species_csv_path;
    std::string dni_profile_csv_path;  // empty: constant DNI
    double area_min_ha = 0.1;
    double area_max_ha = 0.5;
    int surface_grid_points = 9;

    static MissionConfig load(const std::string& path);
};

}  // namespace helioweed::io

#endif
