#ifndef HELIOWEED_SOLAR_HPP
#define HELIOWEED_SOLAR_HPP

#include <vector>

#include "helioweed/errors.hpp"

namespace helioweed::solar {

/* Geographic latitude, degrees, positive north. */
class GeoLatitude {
public:
    explicit GeoLatitude(double phi_deg);
    double deg() const { return phi_; }
    /* True between the Tropic of Cancer and the Tropic of Capricorn. */
    bool tropical() const;

private:
    double phi_;
};

/* Solar declination, degrees; oscillates within +-23.45 over the year. */
class SolarDeclination {
public:
    explicit SolarDeclination(double delta_deg);
    double deg() const { return delta_; }

private:
    double delta_;
};

/* Hour angle: 15 degrees per hour from solar noon, negative before noon. */
class HourAngle {
public:
    static HourAngle from_solar_time(double hours);
    static HourAngle from_degrees(double h_deg);
    double deg() const { return h_; }
    double solar_time() const { return 12.0 + h_ / 15.0; }

private:
    explicit HourAngle(double h_deg) : h_(h_deg) {}
    double h_;
};

/* Angle between the sun's rays and the local vertical, degrees in [0, 180]. */
class ZenithAngle {
public:
    explicit ZenithAngle(double theta_z_deg);
    double deg() const { return theta_z_; }

private:
    double theta_z_;
};

/* Daily interval of solar time during which theta_z stays at or below
   theta_max.  Symmetric about solar noon; empty when the noon zenith
   already exceeds the threshold. */
struct SolarWindow {
    double delta_t_hours;
    double start_solar_time;
    double end_solar_time;
    double theta_max_deg;

    bool empty() const { return delta_t_hours <= 0.0; }
    bool contains(double solar_time) const {
        return solar_time >= start_solar_time && solar_time <= end_solar_time;
    }
};

struct SurfacePoint {
    double phi_deg;
    double delta_deg;
    double delta_t_hours;
};

/*  PURPOSE: solar zenith angle from latitude, declination and hour angle.
    RETURNS: arccos(sin phi sin delta + cos phi cos delta cos h), the
             argument clamped to [-1, 1] before the arccos.               */
ZenithAngle zenith_angle(GeoLatitude phi, SolarDeclination delta, HourAngle h);

/* Zenith at solar noon; analytically equals |phi - delta|. */
ZenithAngle noon_zenith(GeoLatitude phi, SolarDeclination delta);

/*  PURPOSE: closed-form duration of the high-sun window.
    EXPECTS: 0 < theta_max_deg < 90 and |phi| strictly inside 90.
    RETURNS: delta_t = (2/15) arccos((cos theta_max - sin phi sin delta)
             / (cos phi cos delta)), arccos taken in degrees; zero when
             the argument exceeds 1 (sun never reaches the threshold).
    THROWS:  ArgumentBelowNegativeOne when the argument falls below -1,
             which no tropical input with theta_max < 90 can produce.     */
SolarWindow solar_window(GeoLatitude phi, SolarDeclination delta, double theta_max_deg);

/*  PURPOSE: evaluate solar_window over a square grid of (phi, delta)
             covering the tropics, for surface plots.
    RETURNS: rows in row-major order, phi outer, both axes ascending.     */
std::vector<SurfacePoint> window_surface(double theta_max_deg, double grid_step_deg);

/* Cooper's approximation delta = 23.45 sin(360 (284 + n) / 365), within
   about half a degree of ephemeris values; 365-day year, no leap handling. */
SolarDeclination declination_of_day(int day_of_year);

/*  PURPOSE: brute-force check of the closed-form window: sample the
             zenith angle over a full day and count samples at or under
             the threshold.
    EXPECTS: step_seconds >= 1; samples at t = k step for k = 0..86400/step.
    RETURNS: count x step, in hours.                                      */
double scan_window_oracle(GeoLatitude phi, SolarDeclination delta, double theta_max_deg,
                          double step_seconds);

/* Ascending sample positions lo, lo+step, ...; the last point is clamped
   onto hi when accumulated rounding overshoots by under 1e-9. */
std::vector<double> grid_axis(double lo, double hi, double step);

}  // namespace helioweed::solar

#endif
