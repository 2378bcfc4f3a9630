#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helioweed/errors.hpp"
#include "helioweed/optics.hpp"

using namespace helioweed;
using namespace helioweed::optics;

namespace {

LensSpec acrylic() {
    LensSpec lens;
    lens.aperture_width_m = 1.2;
    lens.focal_length_m = 0.9;
    lens.refractive_index = 1.49;
    lens.nominal_transmittance = 1.0;
    lens.peak_concentration = 50.0;
    lens.concentration_model = "cosine";
    return lens;
}

}  // namespace

TEST_CASE("normal-incidence transmittance matches the closed form") {
    // both interfaces see R = ((n-1)/(n+1))^2 at normal incidence
    const LensSpec lens = acrylic();
    const double r = (0.49 / 2.49) * (0.49 / 2.49);
    const double expected = (1.0 - r) * (1.0 - r);
    CHECK(fresnel_transmittance(IncidenceAngle(0), lens) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(fresnel_transmittance(IncidenceAngle(0), lens) ==
          doctest::Approx(0.9240492760056519).epsilon(1e-12));
}

TEST_CASE("nominal transmittance scales the whole curve") {
    LensSpec lens = acrylic();
    lens.nominal_transmittance = 0.9;
    CHECK(fresnel_transmittance(IncidenceAngle(0), lens) ==
          doctest::Approx(0.8316443484050866).epsilon(1e-12));
    CHECK(fresnel_transmittance(IncidenceAngle(60), lens) ==
          doctest::Approx(0.9 * 0.8326170643564309).epsilon(1e-12));
}

TEST_CASE("oblique-incidence anchors") {
    const LensSpec lens = acrylic();
    CHECK(fresnel_transmittance(IncidenceAngle(60), lens) ==
          doctest::Approx(0.8326170643564309).epsilon(1e-12));
    LensSpec dense = acrylic();
    dense.refractive_index = 1.6;
    CHECK(fresnel_transmittance(IncidenceAngle(0), dense) ==
          doctest::Approx(0.8963271594131857).epsilon(1e-12));
}

TEST_CASE("transmittance decreases strictly with incidence") {
    const LensSpec lens = acrylic();
    double prev = fresnel_transmittance(IncidenceAngle(0), lens);
    for (int deg = 1; deg <= 89; ++deg) {
        const double t = fresnel_transmittance(IncidenceAngle(deg), lens);
        CHECK(t < prev);
        prev = t;
    }
}

TEST_CASE("incidence angle domain") {
    CHECK_THROWS_AS(IncidenceAngle(90.0), ValidationError);
    CHECK_THROWS_AS(IncidenceAngle(-0.1), ValidationError);
    CHECK_NOTHROW(IncidenceAngle(89.999));
}

TEST_CASE("efficiency composes transmittance, concentration and cosine") {
    const LensSpec lens = acrylic();
    for (int deg = 0; deg <= 85; deg += 5) {
        const EfficiencySample s = efficiency(IncidenceAngle(deg), lens);
        CHECK(s.eta == s.transmittance * s.concentration * s.cosine_factor);
    }
}

TEST_CASE("normalized efficiency starts at one and never rises") {
    const LensSpec lens = acrylic();
    CHECK(efficiency(IncidenceAngle(0), lens).eta_normalized == 1.0);
    double prev = 1.0;
    for (int deg = 1; deg <= 85; ++deg) {
        const double e = efficiency(IncidenceAngle(deg), lens).eta_normalized;
        CHECK(e <= prev);
        prev = e;
    }
}

TEST_CASE("concentration models") {
    const LensSpec lens = acrylic();
    CHECK(concentration_ratio(IncidenceAngle(0), lens) == doctest::Approx(50.0));
    CHECK(concentration_ratio(IncidenceAngle(60), lens) ==
          doctest::Approx(25.0).epsilon(1e-12));

    LensSpec squared = acrylic();
    squared.concentration_model = "cosine_squared";
    CHECK(concentration_ratio(IncidenceAngle(60), squared) ==
          doctest::Approx(12.5).epsilon(1e-12));

    const auto& names = concentration_model_names();
    CHECK(names.size() == 2);
    CHECK_THROWS_AS(concentration_model("parabolic"), ValidationError);
}

TEST_CASE("lens validation") {
    LensSpec lens = acrylic();
    lens.refractive_index = 0.99;
    CHECK_THROWS_AS(lens.validate(), ValidationError);
    lens = acrylic();
    lens.nominal_transmittance = 0.0;
    CHECK_THROWS_AS(lens.validate(), ValidationError);
    lens = acrylic();
    lens.peak_concentration = -1.0;
    CHECK_THROWS_AS(lens.validate(), ValidationError);
    lens = acrylic();
    lens.concentration_model = "unknown";
    CHECK_THROWS_AS(lens.validate(), ValidationError);
}

TEST_CASE("single-axis compensation removes the tracked component") {
    CHECK(compensation_angle(0.0) == 0.0);
    CHECK(compensation_angle(37.5) == doctest::Approx(37.5));
    CHECK_THROWS_AS(compensation_angle(90.0), ValidationError);
    CHECK_THROWS_AS(compensation_angle(-1.0), ValidationError);
}

TEST_CASE("efficiency curve sampling") {
    const LensSpec lens = acrylic();
    const auto curve = efficiency_curve(lens, 1.0);
    REQUIRE(curve.size() == 86);
    CHECK(curve.front().theta_i_deg == doctest::Approx(0.0));
    CHECK(curve.back().theta_i_deg == doctest::Approx(85.0).epsilon(1e-12));
    CHECK(curve.front().eta_normalized == 1.0);
    CHECK_THROWS_AS(efficiency_curve(lens, 0.0), ValidationError);
}
