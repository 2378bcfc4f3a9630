#ifndef HELIOWEED_FIELD_HPP
#define HELIOWEED_FIELD_HPP

#include <string>
#include <vector>

#include "helioweed/errors.hpp"

namespace helioweed::field {

/* Axis-aligned rectangular field with a row structure for the mapping
   sweep.  row_axis names the driving direction of the rows. */
struct FieldMap {
    double origin_x_m = 0.0;
    double origin_y_m = 0.0;
    double width_m = 0.0;    // extent along x
    double height_m = 0.0;   // extent along y
    double row_spacing_m = 0.0;
    char row_axis = 'x';     // 'x' or 'y'

    void validate() const;
    bool contains(double x_m, double y_m) const;
};

struct WeedTarget {
    std::string id;
    double x_m = 0.0;
    double y_m = 0.0;
    std::string species;
    int detected_day = 1;  // 1-based day index within the mission horizon

    void validate(const FieldMap& field) const;
};

struct UgvSpec {
    double transit_speed_mps = 0.0;
    double turn_time_s = 0.0;
    double start_x_m = 0.0;
    double start_y_m = 0.0;

    void validate() const;
};

}  // namespace helioweed::field

#endif
