#ifndef HELIOWEED_SIMULATE_HPP
#define HELIOWEED_SIMULATE_HPP

#include <string>
#include <vector>

#include "helioweed/planner.hpp"

namespace helioweed::plan {

struct VisitOutcome {
    std::string target;
    int day_of_year;
    double arrival_solar_time;
    double dwell_s;
    double integrated_dose_j_m2;
    double required_dose_j_m2;
    std::string result;  // "treated" or "dose_shortfall"
};

struct Violation {
    std::string code;  // OUT_OF_WINDOW, OVERLAP, MAPPING_OVERLAP, DOSE_SHORTFALL,
                       // UNKNOWN_TARGET, DUPLICATE_VISIT
    std::string target;
    int day_of_year;
    std::string detail;
};

struct SimulationReport {
    double site_latitude_deg;
    double theta_max_deg;
    double t_day_hours;
    std::vector<VisitOutcome> outcomes;
    std::vector<Violation> violations;
    std::vector<std::string> unserved;
    struct {
        double transit_distance_m = 0.0;
        double creep_distance_m = 0.0;
        double energy_on_target_j = 0.0;
        double available_window_hours = 0.0;
    } totals;
    /* day, window bounds and mapping echo for the report command */
    std::vector<DaySchedule> days;
};

/*  PURPOSE: replay a plan against the sun model at 1 s resolution:
             re-derive each day's window, drive the declared kinematics,
             integrate per-visit delivered dose, and score every visit.
    RETURNS: report with per-target outcomes and a violation entry per
             broken constraint; violations never throw.                   */
SimulationReport simulate(const MissionPlan& plan,
                          const std::vector<field::WeedTarget>& targets,
                          const Scenario& scenario);

}  // namespace helioweed::plan

#endif
