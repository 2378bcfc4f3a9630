#include "helioweed/solar.hpp"

#include <cmath>
#include <string>

#include "helioweed/angles.hpp"

namespace helioweed::solar {

GeoLatitude::GeoLatitude(double phi_deg) : phi_(phi_deg) {
    if (!(std::abs(phi_deg) <= 90.0))
        throw ValidationError("latitude " + std::to_string(phi_deg) + " outside [-90, 90]");
}

bool GeoLatitude::tropical() const { return std::abs(phi_) <= kTropicDeg; }

SolarDeclination::SolarDeclination(double delta_deg) : delta_(delta_deg) {
    if (!(std::abs(delta_deg) <= kTropicDeg))
        throw ValidationError("declination " + std::to_string(delta_deg) +
                              " outside [-23.45, 23.45]");
}

HourAngle HourAngle::from_solar_time(double hours) {
    if (!(hours >= 0.0 && hours <= 24.0))
        throw ValidationError("solar time " + std::to_string(hours) + " outside [0, 24]");
    return HourAngle(15.0 * (hours - 12.0));
}

HourAngle HourAngle::from_degrees(double h_deg) {
    if (!(h_deg >= -180.0 && h_deg <= 180.0))
        throw ValidationError("hour angle " + std::to_string(h_deg) + " outside [-180, 180]");
    return HourAngle(h_deg);
}

ZenithAngle::ZenithAngle(double theta_z_deg) : theta_z_(theta_z_deg) {
    if (!(theta_z_deg >= 0.0 && theta_z_deg <= 180.0))
        throw ValidationError("zenith angle " + std::to_string(theta_z_deg) +
                              " outside [0, 180]");
}

ZenithAngle zenith_angle(GeoLatitude phi, SolarDeclination delta, HourAngle h) {
    const double p = deg2rad(phi.deg());
    const double d = deg2rad(delta.deg());
    const double cos_tz =
        std::sin(p) * std::sin(d) + std::cos(p) * std::cos(d) * std::cos(deg2rad(h.deg()));
    return ZenithAngle(rad2deg(std::acos(clamp_unit(cos_tz))));
}

ZenithAngle noon_zenith(GeoLatitude phi, SolarDeclination delta) {
    return zenith_angle(phi, delta, HourAngle::from_degrees(0.0));
}

SolarWindow solar_window(GeoLatitude phi, SolarDeclination delta, double theta_max_deg) {
    if (!(theta_max_deg > 0.0 && theta_max_deg < 90.0))
        throw ValidationError("theta_max " + std::to_string(theta_max_deg) +
                              " outside (0, 90)");
    if (!(std::abs(phi.deg()) < 90.0))
        throw ValidationError("window undefined at the poles; |latitude| must be < 90");

    const double p = deg2rad(phi.deg());
    const double d = deg2rad(delta.deg());
    const double arg =
        (std::cos(deg2rad(theta_max_deg)) - std::sin(p) * std::sin(d)) /
        (std::cos(p) * std::cos(d));

    if (arg < -1.0) throw ArgumentBelowNegativeOne(arg);

    double dt = 0.0;
    if (arg <= 1.0) dt = (2.0 / 15.0) * rad2deg(std::acos(arg));
    return SolarWindow{dt, 12.0 - dt / 2.0, 12.0 + dt / 2.0, theta_max_deg};
}

std::vector<double> grid_axis(double lo, double hi, double step) {
    if (!(step > 0.0)) throw ValidationError("grid step must be positive");
    if (!(hi >= lo)) throw ValidationError("grid range is inverted");
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> points(n);
    for (int i = 0; i < n; ++i) {
        double p = lo + i * step;
        if (std::abs(p - hi) < 1e-9) p = hi;
        points[i] = p;
    }
    return points;
}

std::vector<SurfacePoint> window_surface(double theta_max_deg, double grid_step_deg) {
    const std::vector<double> axis = grid_axis(-kTropicDeg, kTropicDeg, grid_step_deg);
    std::vector<SurfacePoint> grid;
    grid.reserve(axis.size() * axis.size());
    for (double phi : axis)
        for (double delta : axis)
            grid.push_back({phi, delta,
                            solar_window(GeoLatitude(phi), SolarDeclination(delta),
                                         theta_max_deg)
                                .delta_t_hours});
    return grid;
}

SolarDeclination declination_of_day(int day_of_year) {
    if (day_of_year < 1 || day_of_year > 365) throw DayOutOfRange(day_of_year);
    const double delta =
        kTropicDeg * std::sin(deg2rad(360.0 * (284.0 + day_of_year) / 365.0));
    return SolarDeclination(delta);
}

double scan_window_oracle(GeoLatitude phi, SolarDeclination delta, double theta_max_deg,
                          double step_seconds) {
    if (!(step_seconds >= 1.0)) throw ValidationError("scan step must be >= 1 s");
    const long n_steps = static_cast<long>(86400.0 / step_seconds);
    long hits = 0;
    for (long k = 0; k <= n_steps; ++k) {
        const double t = (k * step_seconds) / 3600.0;
        const double tz =
            zenith_angle(phi, delta, HourAngle::from_solar_time(t)).deg();
        if (tz <= theta_max_deg) ++hits;
    }
    return hits * step_seconds / 3600.0;
}

}  // namespace helioweed::solar
