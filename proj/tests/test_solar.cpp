#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helioweed/errors.hpp"
#include "helioweed/solar.hpp"

using namespace helioweed;
using namespace helioweed::solar;

TEST_CASE("noon zenith is the latitude-declination offset") {
    CHECK(noon_zenith(GeoLatitude(0), SolarDeclination(0)).deg() == doctest::Approx(0.0));
    // arccos flattens near 1, so rounding costs sqrt(eps) here; a microdegree
    // bound is the honest expectation for the matched site
    CHECK(noon_zenith(GeoLatitude(23.45), SolarDeclination(23.45)).deg() < 1e-5);
    CHECK(noon_zenith(GeoLatitude(40), SolarDeclination(-23.45)).deg() ==
          doctest::Approx(63.45).epsilon(1e-9));
    CHECK(noon_zenith(GeoLatitude(-10), SolarDeclination(23.45)).deg() ==
          doctest::Approx(33.45).epsilon(1e-9));
}

TEST_CASE("zenith angle at selected hour angles") {
    // equator at equinox: zenith equals |hour angle|
    CHECK(zenith_angle(GeoLatitude(0), SolarDeclination(0), HourAngle::from_degrees(30)).deg() ==
          doctest::Approx(30.0).epsilon(1e-12));
    CHECK(zenith_angle(GeoLatitude(0), SolarDeclination(0), HourAngle::from_degrees(-75)).deg() ==
          doctest::Approx(75.0).epsilon(1e-12));
    // window boundary: the threshold is met exactly at the window's edges
    const SolarWindow w = solar_window(GeoLatitude(10), SolarDeclination(-5), 25.0);
    const double z_edge =
        zenith_angle(GeoLatitude(10), SolarDeclination(-5),
                     HourAngle::from_solar_time(w.start_solar_time))
            .deg();
    CHECK(z_edge == doctest::Approx(25.0).epsilon(1e-9));
}

TEST_CASE("hour angle conversions") {
    CHECK(HourAngle::from_solar_time(12.0).deg() == doctest::Approx(0.0));
    CHECK(HourAngle::from_solar_time(14.0).deg() == doctest::Approx(30.0));
    CHECK(HourAngle::from_degrees(-45.0).solar_time() == doctest::Approx(9.0));
    CHECK_THROWS_AS(HourAngle::from_solar_time(24.5), ValidationError);
    CHECK_THROWS_AS(HourAngle::from_degrees(181.0), ValidationError);
}

TEST_CASE("window durations at matched latitude and declination") {
    CHECK(solar_window(GeoLatitude(0), SolarDeclination(0), 25.0).delta_t_hours ==
          doctest::Approx(10.0 / 3.0).epsilon(1e-12));
    CHECK(solar_window(GeoLatitude(23.45), SolarDeclination(23.45), 25.0).delta_t_hours ==
          doctest::Approx(3.6389780354047123).epsilon(1e-12));
    CHECK(solar_window(GeoLatitude(-23.45), SolarDeclination(-23.45), 25.0).delta_t_hours ==
          doctest::Approx(3.6389780354047123).epsilon(1e-12));
    CHECK(solar_window(GeoLatitude(10), SolarDeclination(10), 25.0).delta_t_hours ==
          doctest::Approx(3.3856069726514555).epsilon(1e-12));
    CHECK(solar_window(GeoLatitude(-10), SolarDeclination(-10), 25.0).delta_t_hours ==
          doctest::Approx(3.3856069726514555).epsilon(1e-12));
}

TEST_CASE("the matched-site window grows away from the equator") {
    // cos(theta_max) sec(phi)^2 rises with |phi|, so the threshold crossing
    // moves outward; the 3.33 h equatorial figure is the minimum, not a
    // constant across matched sites.
    double prev = solar_window(GeoLatitude(0), SolarDeclination(0), 25.0).delta_t_hours;
    for (double phi = 2.0; phi <= 23.45; phi += 2.0) {
        const double w =
            solar_window(GeoLatitude(phi), SolarDeclination(phi), 25.0).delta_t_hours;
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("window for a mismatched site") {
    const SolarWindow w = solar_window(GeoLatitude(0), SolarDeclination(23.45), 25.0);
    CHECK(w.delta_t_hours == doctest::Approx(1.1895804285786724).epsilon(1e-12));
    CHECK(w.start_solar_time == doctest::Approx(12.0 - w.delta_t_hours / 2).epsilon(1e-12));
    CHECK(w.end_solar_time == doctest::Approx(12.0 + w.delta_t_hours / 2).epsilon(1e-12));
    CHECK(w.contains(12.0));
    CHECK(!w.contains(10.0));
}

TEST_CASE("window is empty when the sun never reaches the threshold") {
    const SolarWindow w = solar_window(GeoLatitude(60), SolarDeclination(-23.45), 25.0);
    CHECK(w.empty());
    CHECK(w.delta_t_hours == 0.0);
}

TEST_CASE("window argument below -1 is rejected") {
    CHECK_THROWS_AS(solar_window(GeoLatitude(89), SolarDeclination(23.45), 80.0),
                    ArgumentBelowNegativeOne);
}

TEST_CASE("latitude and declination domains") {
    // +/-90 is a legal latitude, but the window equation excludes the poles
    CHECK_NOTHROW(GeoLatitude(90.0));
    CHECK_THROWS_AS(GeoLatitude(90.1), ValidationError);
    CHECK_THROWS_AS(GeoLatitude(-91.0), ValidationError);
    CHECK_THROWS_AS(solar_window(GeoLatitude(90.0), SolarDeclination(0), 25.0),
                    ValidationError);
    CHECK_THROWS_AS(SolarDeclination(24.0), ValidationError);
    CHECK_THROWS_AS(solar_window(GeoLatitude(0), SolarDeclination(0), 90.0),
                    ValidationError);
}

TEST_CASE("declination through the year") {
    CHECK(declination_of_day(172).deg() ==
          doctest::Approx(23.4497828468136582).epsilon(1e-12));
    CHECK(declination_of_day(355).deg() ==
          doctest::Approx(-23.4497828468136582).epsilon(1e-12));
    CHECK(std::abs(declination_of_day(81).deg()) < 1e-12);
    CHECK(declination_of_day(1).deg() ==
          doctest::Approx(-23.0116367278692380).epsilon(1e-12));
    CHECK_THROWS_AS(declination_of_day(0), DayOutOfRange);
    CHECK_THROWS_AS(declination_of_day(366), DayOutOfRange);
}

TEST_CASE("closed form against the second-scan oracle") {
    const double pairs[][2] = {{0, 0}, {7, 7.53}, {23.45, 23.45}, {-10, 5}, {15, -10}};
    for (const auto& p : pairs) {
        const GeoLatitude phi(p[0]);
        const SolarDeclination delta(p[1]);
        const double closed = solar_window(phi, delta, 25.0).delta_t_hours;
        const double scanned = scan_window_oracle(phi, delta, 25.0, 1.0);
        CHECK(std::abs(closed - scanned) * 3600.0 <= 2.0);
    }
}

TEST_CASE("scan oracle rejects sub-second steps") {
    CHECK_THROWS_AS(scan_window_oracle(GeoLatitude(0), SolarDeclination(0), 25.0, 0.5),
                    ValidationError);
}

TEST_CASE("grid axis construction") {
    const auto fine = grid_axis(0.0, 85.0, 1.0);
    CHECK(fine.size() == 86);
    CHECK(fine.front() == doctest::Approx(0.0));
    CHECK(fine.back() == doctest::Approx(85.0).epsilon(1e-12));

    const auto sweep = grid_axis(-23.45, 23.45, 4.69);
    CHECK(sweep.size() == 11);
    CHECK(sweep.back() == doctest::Approx(23.45).epsilon(1e-12));
}

TEST_CASE("window surface layout and extremes") {
    const auto surface = window_surface(25.0, 2.345);
    REQUIRE(surface.size() == 441);  // 21 x 21, phi-major
    CHECK(surface.front().phi_deg == doctest::Approx(-23.45));
    CHECK(surface.front().delta_deg == doctest::Approx(-23.45));
    CHECK(surface[1].phi_deg == doctest::Approx(-23.45));  // delta varies fastest
    CHECK(surface[1].delta_deg == doctest::Approx(-21.105).epsilon(1e-9));

    double best = -1.0;
    double best_phi = 0.0, best_delta = 0.0;
    for (const auto& pt : surface)
        if (pt.delta_t_hours > best) {
            best = pt.delta_t_hours;
            best_phi = pt.phi_deg;
            best_delta = pt.delta_deg;
        }
    // the two tropic corners tie exactly; the scan keeps the first one
    CHECK(best == doctest::Approx(3.6389780354047123).epsilon(1e-12));
    CHECK(std::abs(best_phi) == doctest::Approx(23.45).epsilon(1e-9));
    CHECK(best_delta == doctest::Approx(best_phi).epsilon(1e-9));
}

TEST_CASE("each latitude row of the surface is unimodal in declination") {
    const auto surface = window_surface(25.0, 2.345);
    const int n = 21;
    for (int i = 0; i < n; ++i) {
        bool falling = false;
        for (int j = 1; j < n; ++j) {
            const double prev = surface[i * n + j - 1].delta_t_hours;
            const double cur = surface[i * n + j].delta_t_hours;
            if (cur < prev - 1e-12) falling = true;
            if (falling) CHECK(cur <= prev + 1e-12);
        }
    }
}

TEST_CASE("surface symmetry under swap and joint negation") {
    const auto surface = window_surface(25.0, 4.69);
    const int n = 11;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double w = surface[i * n + j].delta_t_hours;
            CHECK(w == doctest::Approx(surface[j * n + i].delta_t_hours).epsilon(1e-12));
            CHECK(w ==
                  doctest::Approx(surface[(n - 1 - i) * n + (n - 1 - j)].delta_t_hours)
                      .epsilon(1e-9));
        }
}

TEST_CASE("window surface rejects bad grids") {
    CHECK_THROWS_AS(window_surface(0.0, 2.345), ValidationError);
    CHECK_THROWS_AS(window_surface(25.0, 0.0), ValidationError);
    CHECK_THROWS_AS(window_surface(25.0, -1.0), ValidationError);
}
