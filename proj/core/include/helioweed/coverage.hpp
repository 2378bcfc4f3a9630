#ifndef HELIOWEED_COVERAGE_HPP
#define HELIOWEED_COVERAGE_HPP

#include <vector>

#include "helioweed/errors.hpp"

namespace helioweed::coverage {

/* The irradiated rectangle under the lens.  along_track_m is measured in
   the driving direction, cross_track_m across it; the hour angle of the
   solar module never appears here. */
struct Footprint {
    double along_track_m;
    double cross_track_m;

    void validate() const;
    double area_m2() const { return along_track_m * cross_track_m; }
};

struct CoverageQuery {
    double total_area_m2;
    double speed_mps;
    double hours_per_day = 3.5;

    void validate() const;
};

struct DaysRequired {
    double fractional;
    int whole;
};

struct CoveragePoint {
    double area_m2;
    double speed_mps;
    double total_time_hours;
};

/* Ground area swept after elapsed_s at the given speed: the strip the
   cross-track width paints along the path. */
double swept_area(const Footprint& footprint, double speed_mps, double elapsed_s);

/* Hours of continuous creep needed to sweep total_area_m2. */
double total_time(const CoverageQuery& query, const Footprint& footprint);

/* total_time split over hours_per_day working days; whole is the ceiling
   for calendar planning. */
DaysRequired days_required(const CoverageQuery& query, const Footprint& footprint);

/*  PURPOSE: total_time over an (area, speed) grid for surface plots.
    RETURNS: rows in row-major order, area outer, both axes ascending,
             grid_points samples per axis (>= 2, endpoints included).     */
std::vector<CoveragePoint> coverage_surface(double area_min_m2, double area_max_m2,
                                            double speed_min_mps, double speed_max_mps,
                                            const Footprint& footprint, int grid_points);

}  // namespace helioweed::coverage

#endif
