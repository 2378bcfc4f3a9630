#include "helioweed/field.hpp"

#include <cmath>

namespace helioweed::field {

void FieldMap::validate() const {
    if (!(width_m > 0.0)) throw ValidationError("field width_m must be > 0");
    if (!(height_m > 0.0)) throw ValidationError("field height_m must be > 0");
    if (!(row_spacing_m > 0.0)) throw ValidationError("field row_spacing_m must be > 0");
    if (row_axis != 'x' && row_axis != 'y')
        throw ValidationError("field row_axis must be 'x' or 'y'");
    const double cross_extent = (row_axis == 'x') ? height_m : width_m;
    if (row_spacing_m > cross_extent)
        throw ValidationError("field row_spacing_m exceeds the extent across the rows");
}

bool FieldMap::contains(double x_m, double y_m) const {
    return x_m >= origin_x_m && x_m <= origin_x_m + width_m && y_m >= origin_y_m &&
           y_m <= origin_y_m + height_m;
}

void WeedTarget::validate(const FieldMap& fm) const {
    if (id.empty()) throw ValidationError("target id is empty");
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok)
            throw ValidationError("target id '" + id +
                                  "' has characters outside [A-Za-z0-9_-]");
    }
    if (!fm.contains(x_m, y_m))
        throw ValidationError("target " + id + ": position (" + std::to_string(x_m) + ", " +
                              std::to_string(y_m) + ") outside the field boundary");
    if (detected_day < 1)
        throw ValidationError("target " + id + ": detected_day must be >= 1");
}

void UgvSpec::validate() const {
    if (!(transit_speed_mps > 0.0)) throw ValidationError("ugv transit_speed_mps must be > 0");
    if (!(turn_time_s >= 0.0)) throw ValidationError("ugv turn_time_s must be >= 0");
}

}  // namespace helioweed::field
