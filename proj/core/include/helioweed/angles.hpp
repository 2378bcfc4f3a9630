#ifndef HELIOWEED_ANGLES_HPP
#define HELIOWEED_ANGLES_HPP

#include <cmath>

namespace helioweed {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTropicDeg = 23.45;

inline double deg2rad(double deg) { return deg * (kPi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / kPi); }

/* Clamp a cosine-valued expression into [-1, 1] so arccos never NaNs on
   floating-point overshoot. Alters results only below the 1e-12 level. */
inline double clamp_unit(double x) {
    if (x > 1.0) return 1.0;
    if (x < -1.0) return -1.0;
    return x;
}

}  // namespace helioweed

#endif
