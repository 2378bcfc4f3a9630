#ifndef HELIOWEED_OPTICS_HPP
#define HELIOWEED_OPTICS_HPP

#include <functional>
#include <string>
#include <vector>

#include "helioweed/errors.hpp"

namespace helioweed::optics {

/* Geometry and bulk optical parameters of one linear Fresnel lens. */
struct LensSpec {
    double aperture_width_m;
    double focal_length_m;
    double refractive_index;        // > 1
    double nominal_transmittance;   // T0, (0, 1]
    double peak_concentration;      // Cg0 at normal incidence, >= 1
    std::string concentration_model = "cosine";

    void validate() const;
};

/* Angle between incoming rays and the lens normal, degrees in [0, 90). */
class IncidenceAngle {
public:
    explicit IncidenceAngle(double theta_i_deg);
    double deg() const { return theta_i_; }

private:
    double theta_i_;
};

/* One evaluated point of the efficiency model; eta is the exact product
   of the three stored factors. */
struct EfficiencySample {
    double theta_i_deg;
    double transmittance;
    double concentration;
    double cosine_factor;
    double eta;
    double eta_normalized;
};

/* Concentration degradation law: (theta_i_deg, lens) -> dimensionless.
   Every registered model must return peak_concentration at 0 degrees, be
   non-increasing in the angle and never go negative. */
using ConcentrationModel = std::function<double(double, const LensSpec&)>;

/* Read-only registry built at startup; keyed by the name used in lens
   configuration. */
const std::vector<std::string>& concentration_model_names();
ConcentrationModel concentration_model(const std::string& name);

/*  PURPOSE: two-interface transmittance of the lens material for
             unpolarized light.
    RETURNS: T0 (1 - R_entry)(1 - R_exit) with per-interface reflectance
             R = (Rs + Rp) / 2 from the Fresnel amplitude relations, the
             exit interface evaluated at the Snell-refracted angle.
             Absorption beyond the T0 scalar is ignored.                  */
double fresnel_transmittance(IncidenceAngle theta_i, const LensSpec& lens);

double concentration_ratio(IncidenceAngle theta_i, const LensSpec& lens,
                           const ConcentrationModel& model);
/* Resolves the model from the lens's own concentration_model name. */
double concentration_ratio(IncidenceAngle theta_i, const LensSpec& lens);

/* eta(theta) = T(theta) Cg(theta) cos(theta), plus normalization against
   the same lens at zero incidence. */
EfficiencySample efficiency(IncidenceAngle theta_i, const LensSpec& lens);

/* Single-axis tracking: tilt the lens by the zenith angle itself, so the
   in-plane incidence after compensation is zero.  theta_z in [0, 90). */
double compensation_angle(double theta_z_deg);

/* Samples efficiency over [0, 85] degrees in ascending order. */
std::vector<EfficiencySample> efficiency_curve(const LensSpec& lens, double step_degrees);

}  // namespace helioweed::optics

#endif
