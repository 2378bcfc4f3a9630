#include "helioweed/simulate.hpp"

#include <cmath>
#include <map>
#include <set>

namespace helioweed::plan {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

SimulationReport simulate(const MissionPlan& plan,
                          const std::vector<field::WeedTarget>& targets,
                          const Scenario& scenario) {
    scenario.validate();
    SimulationReport report;
    report.site_latitude_deg = plan.site_latitude_deg;
    report.theta_max_deg = plan.theta_max_deg;
    report.t_day_hours = scenario.t_day_hours;
    report.unserved = plan.unserved;
    report.days = plan.days;

    std::map<std::string, const field::WeedTarget*> by_id;
    for (const auto& t : targets) by_id[t.id] = &t;

    const solar::GeoLatitude site(plan.site_latitude_deg);
    std::set<std::string> visited;

    for (const auto& day : plan.days) {
        const solar::SolarWindow window = solar::solar_window(
            site, solar::declination_of_day(day.day_of_year), plan.theta_max_deg);
        report.totals.available_window_hours += window.delta_t_hours;

        if (day.mapping_pass) {
            const double m_start = day.mapping_pass->start_solar_time;
            const double m_end = m_start + day.mapping_pass->duration_h;
            if (m_end > window.start_solar_time + 1e-9 &&
                m_start < window.end_solar_time - 1e-9)
                report.violations.push_back(
                    {"MAPPING_OVERLAP", "", day.day_of_year,
                     "mapping pass [" + fmt(m_start) + ", " + fmt(m_end) +
                         "] h intrudes into the solar window [" +
                         fmt(window.start_solar_time) + ", " +
                         fmt(window.end_solar_time) + "] h"});
        }

        double x = scenario.ugv.start_x_m, y = scenario.ugv.start_y_m;
        double earliest_next = 0.0;  // physical lower bound on the next arrival
        bool first = true;
        for (const auto& visit : day.visits) {
            const auto found = by_id.find(visit.target);
            if (found == by_id.end()) {
                report.violations.push_back({"UNKNOWN_TARGET", visit.target,
                                             day.day_of_year,
                                             "visit references a target absent from the "
                                             "target list"});
                continue;
            }
            const field::WeedTarget& tg = *found->second;
            if (!visited.insert(tg.id).second)
                report.violations.push_back({"DUPLICATE_VISIT", tg.id, day.day_of_year,
                                             "target visited more than once"});

            const double d = std::hypot(tg.x_m - x, tg.y_m - y);
            const double transit_h = d / scenario.ugv.transit_speed_mps / 3600.0;
            if (!first && visit.arrival_solar_time < earliest_next + transit_h - 1e-9)
                report.violations.push_back(
                    {"OVERLAP", tg.id, day.day_of_year,
                     "arrival " + fmt(visit.arrival_solar_time) +
                         " h precedes the previous departure plus transit (" +
                         fmt(earliest_next + transit_h) + " h)"});

            const double leave = visit.arrival_solar_time + visit.dwell_s / 3600.0;
            if (visit.arrival_solar_time < window.start_solar_time - 1e-9 ||
                leave > window.end_solar_time + 1e-9)
                report.violations.push_back(
                    {"OUT_OF_WINDOW", tg.id, day.day_of_year,
                     "visit [" + fmt(visit.arrival_solar_time) + ", " + fmt(leave) +
                         "] h outside the window [" + fmt(window.start_solar_time) +
                         ", " + fmt(window.end_solar_time) + "] h"});

            const auto& sp = scenario.species_ref(tg.species);
            const double got = integrated_dose(scenario, day.day_of_year,
                                               visit.arrival_solar_time, visit.dwell_s);
            const double needed = sp.reference_exposure_s * sp.reference_flux_wm2 *
                                  sp.multiplier(scenario.target_stage);
            const bool ok = got >= needed;
            if (!ok)
                report.violations.push_back(
                    {"DOSE_SHORTFALL", tg.id, day.day_of_year,
                     "integrated dose " + fmt(got) + " J/m^2 below requirement " +
                         fmt(needed) + " J/m^2"});

            report.outcomes.push_back({tg.id, day.day_of_year, visit.arrival_solar_time,
                                       visit.dwell_s, got, needed,
                                       ok ? "treated" : "dose_shortfall"});

            report.totals.transit_distance_m += d;
            report.totals.creep_distance_m += scenario.footprint.along_track_m;
            report.totals.energy_on_target_j += got * scenario.footprint.area_m2();

            earliest_next = leave;
            x = tg.x_m;
            y = tg.y_m;
            first = false;
        }
    }
    return report;
}

}  // namespace helioweed::plan
