#ifndef HELIOWEED_DOSE_HPP
#define HELIOWEED_DOSE_HPP

#include <string>
#include <utility>
#include <vector>

#include "helioweed/errors.hpp"

namespace helioweed::dose {

enum class Stage { seedling, established };

Stage stage_from_string(const std::string& s);
std::string to_string(Stage stage);

/* Lethal-exposure calibration for one species: seconds to kill at the
   reference delivered flux, plus how much longer established plants need.
   Shipped tables are illustrative placeholders, not agronomic data. */
struct WeedSpecies {
    std::string name;
    double reference_exposure_s;            // > 0
    double reference_flux_wm2;              // > 0
    double stage_multiplier_established;    // >= 1; seedling multiplier is 1

    void validate() const;
    double multiplier(Stage stage) const {
        return stage == Stage::established ? stage_multiplier_established : 1.0;
    }
};

/* Irradiance actually landing on the focal line. */
struct DeliveredFlux {
    double dni_wm2;
    double eta;

    double flux_wm2() const { return dni_wm2 * eta; }
};

/* Output of the dose model.  raw_seconds is the uncapped linear-model
   dwell; seconds is what the planner schedules.  treatable goes false
   when the cap truncated the dwell, meaning the dose cannot be met at
   this flux. */
struct DwellRequirement {
    double seconds;
    double raw_seconds;
    bool treatable;
};

inline constexpr double kDefaultMaxDwellS = 120.0;

/*  PURPOSE: dwell needed for a lethal dose under the linear energy-dose
             model: exposure scales inversely with delivered flux.
    RETURNS: reference_exposure x (reference_flux / flux) x stage
             multiplier, capped at max_dwell_s.
    THROWS:  ZeroFlux when no power reaches the target.                   */
DwellRequirement required_dwell(const WeedSpecies& species, const DeliveredFlux& flux,
                                Stage stage = Stage::seedling,
                                double max_dwell_s = kDefaultMaxDwellS);

/* Speed at which a ground point stays under the focal footprint exactly
   `dwell` seconds. */
double creep_speed(double dwell_s, double footprint_along_track_m);

/* Direct normal irradiance as a function of solar time, piecewise linear
   between the given anchor points and clamped flat outside them. */
class DniProfile {
public:
    static DniProfile constant(double wm2);
    /* Points must be (solar_time_h, dni_wm2), strictly ascending in time,
       non-negative irradiance. */
    static DniProfile from_points(std::vector<std::pair<double, double>> points);

    double at(double solar_time_h) const;
    bool is_constant() const { return points_.size() == 1; }

private:
    explicit DniProfile(std::vector<std::pair<double, double>> points)
        : points_(std::move(points)) {}
    std::vector<std::pair<double, double>> points_;
};

}  // namespace helioweed::dose

#endif
