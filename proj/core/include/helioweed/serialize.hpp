#ifndef HELIOWEED_SERIALIZE_HPP
#define HELIOWEED_SERIALIZE_HPP

#include <string>

#include "helioweed/coverage.hpp"
#include "helioweed/planner.hpp"
#include "helioweed/simulate.hpp"

namespace helioweed::io {

/* JSON text for a mission plan:
   { site, theta_max, days: [{day, window{start,end}, visits: [{target,
     arrival, dwell_s}], mapping_pass|null}], unserved: [] }
   Output is deterministic: keys sorted, two-space indent, trailing
   newline, no timestamps. */
std::string plan_to_json(const plan::MissionPlan& mission);
plan::MissionPlan plan_from_json(const std::string& text);

/* JSON text for a simulation report: outcome per executed visit, one
   violation entry per broken constraint, distance/energy totals. */
std::string report_to_json(const plan::SimulationReport& report);

/* { t_total_hours, days_fractional, days_whole, feasible_within } */
std::string coverage_verdict_json(double t_total_hours, coverage::DaysRequired days,
                                  bool feasible_within);

}  // namespace helioweed::io

#endif
