#ifndef HELIOWEED_PLANNER_HPP
#define HELIOWEED_PLANNER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "helioweed/coverage.hpp"
#include "helioweed/dose.hpp"
#include "helioweed/field.hpp"
#include "helioweed/optics.hpp"
#include "helioweed/solar.hpp"

namespace helioweed::plan {

/* Everything a planning or simulation run needs besides the target list. */
struct Scenario {
    field::FieldMap field_map;
    field::UgvSpec ugv;
    optics::LensSpec lens;
    coverage::Footprint footprint;
    std::map<std::string, dose::WeedSpecies> species;

    double site_latitude_deg = 0.0;
    double theta_max_deg = 25.0;
    double mapping_daylight_zenith_deg = 85.0;
    int start_day_of_year = 1;
    int horizon_days = 30;

    dose::DniProfile dni = dose::DniProfile::constant(900.0);
    double max_dwell_s = dose::kDefaultMaxDwellS;
    dose::Stage target_stage = dose::Stage::seedling;
    double t_day_hours = 3.5;
    /* When false, the lens runs untracked and the incidence angle equals
       the raw zenith angle; for sensitivity studies only. */
    bool compensate_tracking = true;

    void validate() const;
    /* Day-of-year for 1-based horizon day k, wrapping the 365-day year. */
    int day_of_year(int day_index) const;
    const dose::WeedSpecies& species_ref(const std::string& name) const;
};

struct Visit {
    std::string target;
    double arrival_solar_time;
    double dwell_s;
};

struct MappingPass {
    double start_solar_time;
    double duration_h;
};

struct DaySchedule {
    int day_of_year;
    int day_index;  // 1-based position in the horizon
    solar::SolarWindow window;
    std::vector<Visit> visits;
    std::optional<MappingPass> mapping_pass;
};

struct MissionPlan {
    double site_latitude_deg;
    double theta_max_deg;
    int start_day_of_year;
    std::vector<DaySchedule> days;
    std::vector<std::string> unserved;
};

enum class VerdictKind { SPARSE_FEASIBLE, DENSE_INFEASIBLE };

std::string to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind;
    MissionPlan plan;
    int targets_total;
    int served;
    double required_dwell_hours;    // uncapped dwell demand at noon flux, day 1
    double available_window_hours;  // sum of window lengths over the horizon
};

/*  PURPOSE: boustrophedon survey pass over every row of the field,
             scheduled against the borders of the day's solar window so
             the camera never works while the lens should.
    RETURNS: pass placed to end exactly at window open when the morning
             daylight gap holds it, else to start at window close.
    THROWS:  MappingDoesNotFit when neither daylight gap is long enough.  */
MappingPass plan_mapping_pass(const field::FieldMap& fm, const field::UgvSpec& ugv,
                              const Scenario& scenario, int day_of_year);

/* Row count and single-pass travel length of the mapping sweep. */
struct MappingGeometry {
    int rows;
    double path_length_m;
    double duration_s;
};
MappingGeometry mapping_geometry(const field::FieldMap& fm, const field::UgvSpec& ugv);

/*  PURPOSE: schedule treatment visits for every pending target over the
             horizon: per day, nearest-neighbor construction inside the
             solar window, 2-opt on transit distance, then cheapest
             insertion of whatever is still pending, repeated to a fixed
             point.  Ties always break toward the lowest target id.
    RETURNS: plan whose days carry only scheduled activity; targets that
             never fit land in `unserved`.
    THROWS:  NoWindow when every day in the horizon has an empty window.  */
MissionPlan plan_treatment(const std::vector<field::WeedTarget>& targets,
                           const Scenario& scenario);

/* Runs plan_treatment and folds the outcome into the feasibility verdict
   with its supporting numbers. */
Verdict feasibility_verdict(const std::vector<field::WeedTarget>& targets,
                            const Scenario& scenario);

/* Dwell scheduled for a target arriving at the given solar time, using
   the scenario's tracking mode and DNI profile; the value is rounded up
   to the next millisecond and, under non-flat flux, extended until the
   1 s dose integral clears the requirement.  Returns nothing when the
   dose cannot be met within max_dwell_s. */
std::optional<double> scheduled_dwell_on_day(const Scenario& scenario,
                                             const dose::WeedSpecies& species,
                                             int day_of_year, double arrival_solar_time);

/* 1 s left-Riemann dose integral with fractional tail, J/m^2; the same
   integrator the simulator scores visits with. */
double integrated_dose(const Scenario& scenario, int day_of_year,
                       double arrival_solar_time, double dwell_s);

}  // namespace helioweed::plan

#endif
