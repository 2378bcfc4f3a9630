#include "helioweed/optics.hpp"

#include <cmath>
#include <map>

#include "helioweed/angles.hpp"
#include "helioweed/solar.hpp"

namespace helioweed::optics {

void LensSpec::validate() const {
    if (!(aperture_width_m > 0.0)) throw ValidationError("lens aperture_width_m must be > 0");
    if (!(focal_length_m > 0.0)) throw ValidationError("lens focal_length_m must be > 0");
    if (!(refractive_index > 1.0)) throw ValidationError("lens refractive_index must be > 1");
    if (!(nominal_transmittance > 0.0 && nominal_transmittance <= 1.0))
        throw ValidationError("lens nominal_transmittance must be in (0, 1]");
    if (!(peak_concentration >= 1.0)) throw ValidationError("lens peak_concentration must be >= 1");
    helioweed::optics::concentration_model(concentration_model);  // must be registered
}

IncidenceAngle::IncidenceAngle(double theta_i_deg) : theta_i_(theta_i_deg) {
    if (!(theta_i_deg >= 0.0 && theta_i_deg < 90.0))
        throw ValidationError("incidence angle " + std::to_string(theta_i_deg) +
                              " outside [0, 90)");
}

namespace {

/* Unpolarized power reflectance of one interface, light passing from
   index n1 into n2 at the given angle cosines. */
double interface_reflectance(double n1, double n2, double cos_i, double cos_t) {
    const double rs = (n1 * cos_i - n2 * cos_t) / (n1 * cos_i + n2 * cos_t);
    const double rp = (n1 * cos_t - n2 * cos_i) / (n1 * cos_t + n2 * cos_i);
    return 0.5 * (rs * rs + rp * rp);
}

const std::map<std::string, ConcentrationModel>& registry() {
    static const std::map<std::string, ConcentrationModel> models = {
        {"cosine",
         [](double theta_i_deg, const LensSpec& lens) {
             return lens.peak_concentration * std::cos(deg2rad(theta_i_deg));
         }},
        /* Sharper degradation for lenses whose focal line smears quickly
           off axis; same peak, cos^2 falloff. */
        {"cosine_squared",
         [](double theta_i_deg, const LensSpec& lens) {
             const double c = std::cos(deg2rad(theta_i_deg));
             return lens.peak_concentration * c * c;
         }},
    };
    return models;
}

}  // namespace

const std::vector<std::string>& concentration_model_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, model] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

ConcentrationModel concentration_model(const std::string& name) {
    const auto it = registry().find(name);
    if (it == registry().end())
        throw ValidationError("unknown concentration model '" + name + "'");
    return it->second;
}

double fresnel_transmittance(IncidenceAngle theta_i, const LensSpec& lens) {
    const double n = lens.refractive_index;
    const double ti = deg2rad(theta_i.deg());
    const double sin_t = std::sin(ti) / n;
    const double tt = std::asin(sin_t);
    const double r_entry = interface_reflectance(1.0, n, std::cos(ti), std::cos(tt));
    const double r_exit = interface_reflectance(n, 1.0, std::cos(tt), std::cos(ti));
    return lens.nominal_transmittance * (1.0 - r_entry) * (1.0 - r_exit);
}

double concentration_ratio(IncidenceAngle theta_i, const LensSpec& lens,
                           const ConcentrationModel& model) {
    return model(theta_i.deg(), lens);
}

double concentration_ratio(IncidenceAngle theta_i, const LensSpec& lens) {
    return concentration_ratio(theta_i, lens,
                               concentration_model(lens.concentration_model));
}

EfficiencySample efficiency(IncidenceAngle theta_i, const LensSpec& lens) {
    const ConcentrationModel model = concentration_model(lens.concentration_model);
    const double t = fresnel_transmittance(theta_i, lens);
    const double cg = concentration_ratio(theta_i, lens, model);
    const double cosine = std::cos(deg2rad(theta_i.deg()));
    const double eta = t * cg * cosine;

    const double t0 = fresnel_transmittance(IncidenceAngle(0.0), lens);
    const double eta0 = t0 * concentration_ratio(IncidenceAngle(0.0), lens, model) * 1.0;
    return EfficiencySample{theta_i.deg(), t, cg, cosine, eta, eta / eta0};
}

double compensation_angle(double theta_z_deg) {
    if (!(theta_z_deg >= 0.0 && theta_z_deg < 90.0))
        throw ValidationError("compensation needs zenith angle in [0, 90)");
    return theta_z_deg;
}

std::vector<EfficiencySample> efficiency_curve(const LensSpec& lens, double step_degrees) {
    if (!(step_degrees > 0.0)) throw ValidationError("curve step must be positive");
    std::vector<EfficiencySample> curve;
    for (double theta : solar::grid_axis(0.0, 85.0, step_degrees))
        curve.push_back(efficiency(IncidenceAngle(theta), lens));
    return curve;
}

}  // namespace helioweed::optics
