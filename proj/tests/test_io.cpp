#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "helioweed/config.hpp"
#include "helioweed/errors.hpp"
#include "helioweed/planner.hpp"
#include "helioweed/serialize.hpp"
#include "helioweed/simulate.hpp"
#include "helioweed/tables.hpp"
#include "support/schema_check.hpp"

using namespace helioweed;

namespace {

const std::string kData = DATA_DIR;
const std::string kSchemas = SCHEMAS_DIR;

std::filesystem::path scratch_file(const std::string& name, const std::string& body) {
    const auto dir = std::filesystem::temp_directory_path() / "helioweed_io_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path);
    out << body;
    out.close();
    return path;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("species table loads") {
    const auto species = io::load_species_csv(kData + "/species.csv");
    REQUIRE(species.size() == 2);
    const auto& pigweed = species.at("amaranthus_retroflexus");
    CHECK(pigweed.reference_exposure_s == 20.0);
    CHECK(pigweed.reference_flux_wm2 == 37000.0);
    CHECK(pigweed.stage_multiplier_established == 1.5);
}

TEST_CASE("species table rejects malformed input") {
    const auto dup = scratch_file(
        "dup_species.csv",
        "name,reference_exposure_s,reference_flux_wm2,stage_multiplier_established\n"
        "a,20,37000,1.5\na,30,37000,1.5\n");
    CHECK_THROWS_AS(io::load_species_csv(dup.string()), ValidationError);

    const auto header = scratch_file("bad_header.csv", "species,exposure\na,20\n");
    CHECK_THROWS_AS(io::load_species_csv(header.string()), ValidationError);

    const auto empty = scratch_file(
        "empty_species.csv",
        "name,reference_exposure_s,reference_flux_wm2,stage_multiplier_established\n");
    CHECK_THROWS_AS(io::load_species_csv(empty.string()), ValidationError);

    const auto junk = scratch_file(
        "junk_species.csv",
        "name,reference_exposure_s,reference_flux_wm2,stage_multiplier_established\n"
        "a,twenty,37000,1.5\n");
    CHECK_THROWS_AS(io::load_species_csv(junk.string()), ValidationError);

    CHECK_THROWS_AS(io::load_species_csv(kData + "/does_not_exist.csv"), ValidationError);
}

TEST_CASE("target list loads and respects the field boundary") {
    const field::FieldMap fm{0.0, 0.0, 40.0, 25.0, 2.0, 'x'};
    const auto targets = io::load_targets_csv(kData + "/targets_sparse.csv", &fm);
    REQUIRE(targets.size() == 10);
    CHECK(targets[0].id == "w01");
    CHECK(targets[0].species == "amaranthus_retroflexus");
    CHECK(targets[0].detected_day == 1);

    const auto outside = scratch_file("outside.csv",
                                      "id,x_m,y_m,species,detected_day\n"
                                      "far,99,5,amaranthus_retroflexus,1\n");
    CHECK_THROWS_AS(io::load_targets_csv(outside.string(), &fm), ValidationError);
    // without a boundary the same row is fine
    CHECK(io::load_targets_csv(outside.string(), nullptr).size() == 1);

    const auto bad_id = scratch_file("bad_id.csv",
                                     "id,x_m,y_m,species,detected_day\n"
                                     "no spaces,5,5,amaranthus_retroflexus,1\n");
    CHECK_THROWS_AS(io::load_targets_csv(bad_id.string(), &fm), ValidationError);

    const auto bad_day = scratch_file("bad_day.csv",
                                      "id,x_m,y_m,species,detected_day\n"
                                      "a,5,5,amaranthus_retroflexus,0\n");
    CHECK_THROWS_AS(io::load_targets_csv(bad_day.string(), &fm), ValidationError);
}

TEST_CASE("irradiance profile loads") {
    const auto profile = io::load_dni_profile_csv(kData + "/dni_clear_day.csv");
    CHECK(profile.at(12.0) == doctest::Approx(900.0));
    CHECK(profile.at(7.0) == doctest::Approx(210.0).epsilon(1e-12));
    CHECK(profile.at(3.0) == doctest::Approx(0.0));

    const auto unsorted = scratch_file("unsorted_dni.csv",
                                       "solar_time_h,dni_wm2\n12,900\n10,760\n");
    CHECK_THROWS_AS(io::load_dni_profile_csv(unsorted.string()), ValidationError);
}

TEST_CASE("mission config loads with defaults and relative paths") {
    const io::MissionConfig cfg = io::MissionConfig::load(kData + "/demo.ini");
    const plan::Scenario& sc = cfg.scenario;
    CHECK(sc.site_latitude_deg == 7.0);
    CHECK(sc.theta_max_deg == 25.0);
    CHECK(sc.mapping_daylight_zenith_deg == 85.0);  // default
    CHECK(sc.lens.refractive_index == 1.49);
    CHECK(sc.field_map.width_m == 40.0);
    CHECK(sc.ugv.start_x_m == 0.0);  // defaults to the field origin
    CHECK(sc.start_day_of_year == 100);
    CHECK(sc.horizon_days == 30);
    CHECK(sc.compensate_tracking);
    CHECK(sc.dni.is_constant());
    CHECK(sc.dni.at(12.0) == 900.0);
    CHECK(sc.species.count("portulaca_oleracea") == 1);
    CHECK(cfg.area_min_ha == 0.1);
    CHECK(cfg.surface_grid_points == 9);
}

TEST_CASE("mission config rejects unknown and missing keys") {
    const std::string species_line = "species_csv = " + kData + "/species.csv\n";

    const auto unknown = scratch_file("unknown_key.ini",
                                      "[site]\nlatitude_deg = 7\nfrobnication = 3\n"
                                      "[lens]\naperture_width_m = 1.2\n"
                                      "focal_length_m = 0.9\nrefractive_index = 1.49\n"
                                      "nominal_transmittance = 0.9\npeak_concentration = 50\n"
                                      "[footprint]\nalong_track_m = 0.05\ncross_track_m = 0.1\n"
                                      "[field]\nwidth_m = 40\nheight_m = 25\nrow_spacing_m = 2\n"
                                      "[ugv]\ntransit_speed_mps = 0.5\n"
                                      "[mission]\nstart_day_of_year = 100\nhorizon_days = 30\n"
                                      "[files]\n" + species_line);
    CHECK_THROWS_WITH_AS(io::MissionConfig::load(unknown.string()),
                         doctest::Contains("site.frobnication"), ValidationError);

    const auto missing = scratch_file("missing_key.ini",
                                      "[site]\nlatitude_deg = 7\n"
                                      "[files]\n" + species_line);
    CHECK_THROWS_AS(io::MissionConfig::load(missing.string()), ValidationError);

    const auto dup = scratch_file("dup_key.ini",
                                  "[site]\nlatitude_deg = 7\nlatitude_deg = 8\n");
    CHECK_THROWS_AS(io::MissionConfig::load(dup.string()), ValidationError);
}

TEST_CASE("surface CSV uses six significant digits") {
    std::ostringstream out;
    io::write_window_surface_csv(out, solar::window_surface(25.0, 23.45));
    const std::string text = out.str();
    CHECK(text.rfind("phi_deg,delta_deg,delta_t_hours\n", 0) == 0);
    CHECK(text.find("-23.45,-23.45,3.63898\n") != std::string::npos);
    CHECK(text.find("0,0,3.33333\n") != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("efficiency CSV carries the full decomposition") {
    optics::LensSpec lens{1.2, 0.9, 1.49, 0.9, 50.0, "cosine"};
    std::ostringstream out;
    io::write_efficiency_curve_csv(out, optics::efficiency_curve(lens, 17.0));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta_i_deg,transmittance,concentration,cosine,eta,eta_normalized");
    std::getline(in, line);
    CHECK(line == "0,0.831644,50,1,41.5822,1");
}

TEST_CASE("coverage CSV layout") {
    const coverage::Footprint fp{0.05, 0.10};
    std::ostringstream out;
    io::write_coverage_surface_csv(out,
                                   coverage::coverage_surface(1000, 2000, 0.01, 0.02, fp, 2));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "area_m2,speed_mps,total_time_hours");
    std::getline(in, line);
    CHECK(line == "1000,0.01,277.778");
}

TEST_CASE("plan json validates against its schema") {
    const io::MissionConfig cfg = io::MissionConfig::load(kData + "/demo.ini");
    const auto targets =
        io::load_targets_csv(kData + "/targets_sparse.csv", &cfg.scenario.field_map);
    const plan::MissionPlan plan = plan::plan_treatment(targets, cfg.scenario);

    const std::string text = io::plan_to_json(plan);
    CHECK(text.back() == '\n');
    const auto instance = nlohmann::json::parse(text);
    const auto schema = load_json_file(kSchemas + "/plan.schema.json");
    const auto violations = schema_check::validate(instance, schema);
    for (const auto& v : violations) MESSAGE(v);
    CHECK(violations.empty());
}

TEST_CASE("simulation report json validates against its schema") {
    const io::MissionConfig cfg = io::MissionConfig::load(kData + "/demo.ini");
    const auto targets =
        io::load_targets_csv(kData + "/targets_sparse.csv", &cfg.scenario.field_map);
    const plan::MissionPlan plan = plan::plan_treatment(targets, cfg.scenario);
    const plan::SimulationReport report = plan::simulate(plan, targets, cfg.scenario);

    const auto instance = nlohmann::json::parse(io::report_to_json(report));
    const auto schema = load_json_file(kSchemas + "/simulation_report.schema.json");
    const auto violations = schema_check::validate(instance, schema);
    for (const auto& v : violations) MESSAGE(v);
    CHECK(violations.empty());
    CHECK(instance["violations"].empty());
    CHECK(instance["outcomes"].size() == targets.size());
}

TEST_CASE("coverage verdict json validates against its schema") {
    const coverage::Footprint fp{0.05, 0.10};
    const coverage::CoverageQuery q{1000.0, 0.05, 3.5};
    const std::string text =
        io::coverage_verdict_json(coverage::total_time(q, fp),
                                  coverage::days_required(q, fp), true);
    const auto instance = nlohmann::json::parse(text);
    const auto schema = load_json_file(kSchemas + "/coverage_verdict.schema.json");
    CHECK(schema_check::validate(instance, schema).empty());
    CHECK(instance["days_whole"] == 16);
    CHECK(instance["feasible_within"] == true);
}

TEST_CASE("plan json round trip is byte stable") {
    const io::MissionConfig cfg = io::MissionConfig::load(kData + "/demo.ini");
    const auto targets =
        io::load_targets_csv(kData + "/targets_sparse.csv", &cfg.scenario.field_map);
    const std::string text = io::plan_to_json(plan::plan_treatment(targets, cfg.scenario));
    CHECK(io::plan_to_json(io::plan_from_json(text)) == text);
}

TEST_CASE("plan json parser rejects structural damage") {
    CHECK_THROWS_AS(io::plan_from_json("{"), ValidationError);
    CHECK_THROWS_AS(io::plan_from_json("[]"), ValidationError);
    CHECK_THROWS_AS(io::plan_from_json("{\"site\": 7}"), ValidationError);
    CHECK_THROWS_AS(
        io::plan_from_json(
            R"({"site": "seven", "theta_max": 25, "days": [], "unserved": []})"),
        ValidationError);
}
