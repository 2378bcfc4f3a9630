/* helioweed: solar windows, lens efficiency, coverage budgets and mission
   plans for concentrated-solar weed control from one scenario file. */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "helioweed/config.hpp"
#include "helioweed/coverage.hpp"
#include "helioweed/dose.hpp"
#include "helioweed/errors.hpp"
#include "helioweed/optics.hpp"
#include "helioweed/planner.hpp"
#include "helioweed/serialize.hpp"
#include "helioweed/simulate.hpp"
#include "helioweed/solar.hpp"
#include "helioweed/tables.hpp"

namespace {

using namespace helioweed;

constexpr double kDefaultSweepStepDeg = 4.69;  // 11 samples across the tropics

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
}

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

/* Dwell range over every species and both growth stages at the scenario's
   noon flux on the first day; creep speeds derive the coverage speed axis. */
void dose_speed_range(const plan::Scenario& sc, double& speed_min, double& speed_max) {
    const double eta = optics::efficiency(optics::IncidenceAngle(0.0), sc.lens).eta;
    const dose::DeliveredFlux flux{sc.dni.at(12.0), eta};
    double dwell_min = 0.0, dwell_max = 0.0;
    bool first = true;
    for (const auto& [name, sp] : sc.species) {
        for (const dose::Stage stage : {dose::Stage::seedling, dose::Stage::established}) {
            const double d =
                dose::required_dwell(sp, flux, stage, sc.max_dwell_s).seconds;
            dwell_min = first ? d : std::min(dwell_min, d);
            dwell_max = first ? d : std::max(dwell_max, d);
            first = false;
        }
    }
    speed_min = dose::creep_speed(dwell_max, sc.footprint.along_track_m);
    speed_max = dose::creep_speed(dwell_min, sc.footprint.along_track_m);
}

int cmd_window(const std::optional<double>& lat, const std::optional<double>& delta,
               const std::optional<int>& day, double theta_max, bool verify, bool sweep,
               double step, const std::string& out) {
    if (sweep) {
        std::ostringstream csv;
        io::write_window_surface_csv(csv, solar::window_surface(theta_max, step));
        write_output(out, csv.str());
        return 0;
    }
    if (!lat) throw ValidationError("--lat is required unless --sweep is given");
    if (delta && day) throw ValidationError("give either --delta or --day, not both");
    if (!delta && !day) throw ValidationError("one of --delta or --day is required");

    const solar::GeoLatitude phi(*lat);
    const solar::SolarDeclination decl =
        delta ? solar::SolarDeclination(*delta) : solar::declination_of_day(*day);
    const solar::SolarWindow w = solar::solar_window(phi, decl, theta_max);

    std::ostringstream text;
    text << "delta_t_hours " << fixed6(w.delta_t_hours) << "\n"
         << "start_solar_time " << fixed6(w.start_solar_time) << "\n"
         << "end_solar_time " << fixed6(w.end_solar_time) << "\n";
    if (verify) {
        const double oracle = solar::scan_window_oracle(phi, decl, theta_max, 60.0);
        text << "scan_oracle_hours " << fixed6(oracle) << "\n"
             << "difference_seconds " << fixed6((w.delta_t_hours - oracle) * 3600.0)
             << "\n";
    }
    write_output(out, text.str());
    return 0;
}

int cmd_efficiency_curve(const std::string& config_path, double step,
                         const std::string& out) {
    const io::MissionConfig cfg = io::MissionConfig::load(config_path);
    std::ostringstream csv;
    io::write_efficiency_curve_csv(csv, optics::efficiency_curve(cfg.scenario.lens, step));
    write_output(out, csv.str());
    return 0;
}

int cmd_coverage(const std::string& config_path, const std::optional<double>& area_ha,
                 const std::optional<double>& speed, const std::optional<int>& budget_days,
                 bool as_json, bool surface, int grid,
                 const std::optional<double>& speed_min_flag,
                 const std::optional<double>& speed_max_flag, const std::string& out) {
    const io::MissionConfig cfg = io::MissionConfig::load(config_path);
    const plan::Scenario& sc = cfg.scenario;

    double speed_min = 0.0, speed_max = 0.0;
    dose_speed_range(sc, speed_min, speed_max);
    if (speed_min_flag) speed_min = *speed_min_flag;
    if (speed_max_flag) speed_max = *speed_max_flag;

    if (surface) {
        const int points = grid > 0 ? grid : cfg.surface_grid_points;
        std::ostringstream csv;
        io::write_coverage_surface_csv(
            csv, coverage::coverage_surface(cfg.area_min_ha * 10000.0,
                                            cfg.area_max_ha * 10000.0, speed_min,
                                            speed_max, sc.footprint, points));
        write_output(out, csv.str());
        return 0;
    }

    const coverage::CoverageQuery query{(area_ha ? *area_ha : cfg.area_min_ha) * 10000.0,
                                        speed ? *speed : speed_max, sc.t_day_hours};
    const double t_total = coverage::total_time(query, sc.footprint);
    const coverage::DaysRequired days = coverage::days_required(query, sc.footprint);
    const int budget = budget_days ? *budget_days : sc.horizon_days;
    const bool feasible = days.whole <= budget;

    if (as_json) {
        write_output(out, io::coverage_verdict_json(t_total, days, feasible));
        return 0;
    }
    std::ostringstream text;
    text << "t_total_hours " << fixed6(t_total) << "\n"
         << "days_fractional " << fixed6(days.fractional) << "\n"
         << "days_whole " << days.whole << "\n"
         << "feasible_within " << (feasible ? "true" : "false") << " (budget " << budget
         << " days)\n";
    write_output(out, text.str());
    return 0;
}

void print_verdict(std::ostream& os, const plan::Verdict& verdict) {
    os << "verdict " << plan::to_string(verdict.kind) << "\n"
       << "targets_total " << verdict.targets_total << "\n"
       << "served " << verdict.served << "\n"
       << "unserved " << (verdict.targets_total - verdict.served) << "\n"
       << "required_dwell_hours " << fixed6(verdict.required_dwell_hours) << "\n"
       << "available_window_hours " << fixed6(verdict.available_window_hours) << "\n"
       << "days_active " << verdict.plan.days.size() << "\n";
}

int cmd_plan(const std::string& config_path, const std::string& targets_path,
             const std::string& out) {
    const io::MissionConfig cfg = io::MissionConfig::load(config_path);
    const std::vector<field::WeedTarget> targets =
        io::load_targets_csv(targets_path, &cfg.scenario.field_map);

    const plan::Verdict verdict = plan::feasibility_verdict(targets, cfg.scenario);
    write_output(out, io::plan_to_json(verdict.plan));

    print_verdict(std::cout, verdict);
    std::cout << "plan_written " << out << "\n";
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& targets_path,
                 const std::string& plan_path, const std::string& out) {
    const io::MissionConfig cfg = io::MissionConfig::load(config_path);
    const std::vector<field::WeedTarget> targets =
        io::load_targets_csv(targets_path, &cfg.scenario.field_map);
    const plan::MissionPlan mission = io::plan_from_json(read_text_file(plan_path));

    const plan::SimulationReport report = plan::simulate(mission, targets, cfg.scenario);
    write_output(out, io::report_to_json(report));

    std::cout << "outcomes " << report.outcomes.size() << "\n"
              << "violations " << report.violations.size() << "\n"
              << "report_written " << out << "\n";
    return 0;
}

int cmd_report(const std::string& sim_path) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(read_text_file(sim_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("simulation report JSON: ") + e.what());
    }

    const auto& outcomes = root.at("outcomes");
    const auto& violations = root.at("violations");
    const auto& unserved = root.at("unserved");
    const auto& days = root.at("days");
    const double t_day = root.at("t_day_hours").get<double>();
    const double window_hours =
        root.at("totals").at("available_window_hours").get<double>();

    int treated = 0, shortfall = 0;
    for (const auto& o : outcomes)
        (o.at("result").get<std::string>() == "treated" ? treated : shortfall) += 1;

    const bool feasible = unserved.empty();
    std::cout << "verdict " << (feasible ? "SPARSE_FEASIBLE" : "DENSE_INFEASIBLE") << "\n"
              << "visits " << outcomes.size() << " (treated " << treated
              << ", dose_shortfall " << shortfall << ")\n"
              << "unserved " << unserved.size() << "\n"
              << "violations " << violations.size() << "\n"
              << "days_active " << days.size() << "\n"
              << "available_window_hours " << fixed6(window_hours) << "\n"
              << "t_day_hours " << fixed6(t_day) << "\n";
    if (!days.empty()) {
        const double mean = window_hours / static_cast<double>(days.size());
        std::cout << "note: the day budget t_day = " << fixed6(t_day)
                  << " h is a planning constant; the sun-derived windows average "
                  << fixed6(mean)
                  << " h over the active days and are what the schedule binds to\n";
    }
    for (const auto& v : violations)
        std::cout << "violation " << v.at("code").get<std::string>() << " target "
                  << v.at("target").get<std::string>() << " day " << v.at("day").get<int>()
                  << ": " << v.at("detail").get<std::string>() << "\n";
    for (const auto& o : outcomes)
        std::cout << "visit " << o.at("target").get<std::string>() << " day "
                  << o.at("day").get<int>() << " arrival "
                  << fixed6(o.at("arrival").get<double>()) << " dwell_s "
                  << o.at("dwell_s").get<double>() << " " << o.at("result").get<std::string>()
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concentrated-solar weed control feasibility toolkit"};
    app.require_subcommand(1);

    // window
    auto* window = app.add_subcommand("window", "high-sun window duration and bounds");
    std::optional<double> w_lat, w_delta;
    std::optional<int> w_day;
    double w_theta = 25.0, w_step = kDefaultSweepStepDeg;
    bool w_verify = false, w_sweep = false;
    std::string w_out;
    window->add_option("--lat", w_lat, "site latitude, degrees");
    window->add_option("--delta", w_delta, "solar declination, degrees");
    window->add_option("--day", w_day, "day of year 1..365 (sets declination)");
    window->add_option("--theta-max", w_theta, "zenith threshold, degrees");
    window->add_flag("--verify", w_verify, "also run the minute-scan oracle");
    window->add_flag("--sweep", w_sweep, "emit the (phi, delta) surface as CSV");
    window->add_option("--step", w_step, "sweep grid step, degrees");
    window->add_option("--out", w_out, "write to file instead of stdout");

    // efficiency-curve
    auto* curve = app.add_subcommand("efficiency-curve", "lens efficiency vs incidence");
    std::string c_config, c_out;
    double c_step = 1.0;
    curve->add_option("--config", c_config, "scenario file")->required();
    curve->add_option("--step", c_step, "incidence step, degrees");
    curve->add_option("--out", c_out, "write to file instead of stdout");

    // coverage
    auto* cover = app.add_subcommand("coverage", "blanket-coverage time and day budget");
    std::string v_config, v_out;
    std::optional<double> v_area, v_speed, v_speed_min, v_speed_max;
    std::optional<int> v_budget;
    bool v_json = false, v_surface = false;
    int v_grid = 0;
    cover->add_option("--config", v_config, "scenario file")->required();
    cover->add_option("--area-ha", v_area, "field area, hectares");
    cover->add_option("--speed", v_speed, "creep speed, m/s");
    cover->add_option("--budget-days", v_budget, "day budget for the feasibility flag");
    cover->add_flag("--json", v_json, "emit the verdict as JSON");
    cover->add_flag("--surface", v_surface, "emit the (area, speed) surface as CSV");
    cover->add_option("--grid", v_grid, "surface grid points per axis");
    cover->add_option("--speed-min", v_speed_min, "override the dose-derived speed axis");
    cover->add_option("--speed-max", v_speed_max, "override the dose-derived speed axis");
    cover->add_option("--out", v_out, "write to file instead of stdout");

    // plan
    auto* planner = app.add_subcommand("plan", "two-phase mission plan over the horizon");
    std::string p_config, p_targets, p_out;
    planner->add_option("--config", p_config, "scenario file")->required();
    planner->add_option("--targets", p_targets, "target list CSV")->required();
    planner->add_option("--out", p_out, "plan JSON output path")->required();

    // simulate
    auto* sim = app.add_subcommand("simulate", "replay a plan against the sun model");
    std::string s_config, s_targets, s_plan, s_out;
    sim->add_option("--config", s_config, "scenario file")->required();
    sim->add_option("--targets", s_targets, "target list CSV")->required();
    sim->add_option("--plan", s_plan, "plan JSON path")->required();
    sim->add_option("--out", s_out, "report JSON output path")->required();

    // report
    auto* rep = app.add_subcommand("report", "human-readable verdict from a report");
    std::string r_sim;
    rep->add_option("--sim", r_sim, "simulation report JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (window->parsed())
            return cmd_window(w_lat, w_delta, w_day, w_theta, w_verify, w_sweep, w_step,
                              w_out);
        if (curve->parsed()) return cmd_efficiency_curve(c_config, c_step, c_out);
        if (cover->parsed())
            return cmd_coverage(v_config, v_area, v_speed, v_budget, v_json, v_surface,
                                v_grid, v_speed_min, v_speed_max, v_out);
        if (planner->parsed()) return cmd_plan(p_config, p_targets, p_out);
        if (sim->parsed()) return cmd_simulate(s_config, s_targets, s_plan, s_out);
        if (rep->parsed()) return cmd_report(r_sim);
    } catch (const InfeasibilityError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
