#include "helioweed/coverage.hpp"

#include <cmath>

namespace helioweed::coverage {

void Footprint::validate() const {
    if (!(along_track_m > 0.0)) throw ValidationError("footprint along_track_m must be > 0");
    if (!(cross_track_m > 0.0)) throw ValidationError("footprint cross_track_m must be > 0");
}

void CoverageQuery::validate() const {
    if (!(total_area_m2 > 0.0)) throw ValidationError("total_area_m2 must be > 0");
    if (!(speed_mps > 0.0)) throw ValidationError("speed_mps must be > 0");
    if (!(hours_per_day > 0.0)) throw ValidationError("hours_per_day must be > 0");
}

double swept_area(const Footprint& footprint, double speed_mps, double elapsed_s) {
    footprint.validate();
    if (!(speed_mps > 0.0)) throw ValidationError("speed_mps must be > 0");
    if (!(elapsed_s >= 0.0)) throw ValidationError("elapsed_s must be >= 0");
    return footprint.cross_track_m * speed_mps * elapsed_s;
}

double total_time(const CoverageQuery& query, const Footprint& footprint) {
    query.validate();
    footprint.validate();
    const double seconds = query.total_area_m2 / (footprint.cross_track_m * query.speed_mps);
    return seconds / 3600.0;
}

DaysRequired days_required(const CoverageQuery& query, const Footprint& footprint) {
    const double fractional = total_time(query, footprint) / query.hours_per_day;
    return DaysRequired{fractional, static_cast<int>(std::ceil(fractional))};
}

std::vector<CoveragePoint> coverage_surface(double area_min_m2, double area_max_m2,
                                            double speed_min_mps, double speed_max_mps,
                                            const Footprint& footprint, int grid_points) {
    footprint.validate();
    if (!(area_min_m2 > 0.0 && area_max_m2 >= area_min_m2))
        throw ValidationError("area range must be positive and ordered");
    if (!(speed_min_mps > 0.0 && speed_max_mps >= speed_min_mps))
        throw ValidationError("speed range must be positive and ordered");
    if (grid_points < 2) throw ValidationError("surface grid needs at least 2 points per axis");

    std::vector<CoveragePoint> grid;
    grid.reserve(static_cast<size_t>(grid_points) * grid_points);
    for (int i = 0; i < grid_points; ++i) {
        const double area =
            area_min_m2 + (area_max_m2 - area_min_m2) * i / (grid_points - 1);
        for (int j = 0; j < grid_points; ++j) {
            const double speed =
                speed_min_mps + (speed_max_mps - speed_min_mps) * j / (grid_points - 1);
            const CoverageQuery q{area, speed, 3.5};
            grid.push_back({area, speed, total_time(q, footprint)});
        }
    }
    return grid;
}

}  // namespace helioweed::coverage
