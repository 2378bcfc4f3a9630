#include "helioweed/dose.hpp"

namespace helioweed::dose {

Stage stage_from_string(const std::string& s) {
    if (s == "seedling") return Stage::seedling;
    if (s == "established") return Stage::established;
    throw ValidationError("unknown growth stage '" + s + "' (seedling|established)");
}

std::string to_string(Stage stage) {
    return stage == Stage::established ? "established" : "seedling";
}

void WeedSpecies::validate() const {
    if (name.empty()) throw ValidationError("species name is empty");
    if (!(reference_exposure_s > 0.0))
        throw ValidationError("species " + name + ": reference_exposure_s must be > 0");
    if (!(reference_flux_wm2 > 0.0))
        throw ValidationError("species " + name + ": reference_flux_wm2 must be > 0");
    if (!(stage_multiplier_established >= 1.0))
        throw ValidationError("species " + name + ": established multiplier must be >= 1");
}

DwellRequirement required_dwell(const WeedSpecies& species, const DeliveredFlux& flux,
                                Stage stage, double max_dwell_s) {
    if (!(max_dwell_s > 0.0)) throw ValidationError("max_dwell_s must be > 0");
    if (!(flux.flux_wm2() > 0.0)) throw ZeroFlux();

    const double raw = species.reference_exposure_s *
                       (species.reference_flux_wm2 / flux.flux_wm2()) *
                       species.multiplier(stage);
    if (raw > max_dwell_s) return DwellRequirement{max_dwell_s, raw, false};
    return DwellRequirement{raw, raw, true};
}

double creep_speed(double dwell_s, double footprint_along_track_m) {
    if (!(dwell_s > 0.0)) throw ValidationError("dwell must be > 0");
    if (!(footprint_along_track_m > 0.0))
        throw ValidationError("footprint along-track length must be > 0");
    return footprint_along_track_m / dwell_s;
}

DniProfile DniProfile::constant(double wm2) {
    if (!(wm2 >= 0.0)) throw ValidationError("DNI must be >= 0");
    return DniProfile({{12.0, wm2}});
}

DniProfile DniProfile::from_points(std::vector<std::pair<double, double>> points) {
    if (points.empty()) throw ValidationError("DNI profile needs at least one point");
    for (size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].second >= 0.0))
            throw ValidationError("DNI profile point " + std::to_string(i + 1) +
                                  ": irradiance must be >= 0");
        if (i > 0 && !(points[i].first > points[i - 1].first))
            throw ValidationError("DNI profile point " + std::to_string(i + 1) +
                                  ": solar times must be strictly ascending");
    }
    return DniProfile(std::move(points));
}

double DniProfile::at(double solar_time_h) const {
    if (solar_time_h <= points_.front().first) return points_.front().second;
    if (solar_time_h >= points_.back().first) return points_.back().second;
    for (size_t i = 1; i < points_.size(); ++i) {
        if (solar_time_h <= points_[i].first) {
            const auto& [t0, v0] = points_[i - 1];
            const auto& [t1, v1] = points_[i];
            return v0 + (v1 - v0) * (solar_time_h - t0) / (t1 - t0);
        }
    }
    return points_.back().second;
}

}  // namespace helioweed::dose
