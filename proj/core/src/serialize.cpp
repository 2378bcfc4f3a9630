#include "helioweed/serialize.hpp"

#include <json.hpp>

namespace helioweed::io {

using nlohmann::json;

namespace {

json window_to_json(const solar::SolarWindow& w) {
    return json{{"start", w.start_solar_time}, {"end", w.end_solar_time}};
}

json day_header_json(const plan::DaySchedule& day) {
    json j;
    j["day"] = day.day_of_year;
    j["window"] = window_to_json(day.window);
    if (day.mapping_pass)
        j["mapping_pass"] = json{{"start", day.mapping_pass->start_solar_time},
                                 {"duration_h", day.mapping_pass->duration_h}};
    else
        j["mapping_pass"] = nullptr;
    return j;
}

const json& require(const json& j, const char* key, const char* where) {
    const auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(std::string("plan JSON: missing '") + key + "' in " + where);
    return *it;
}

double require_number(const json& j, const char* key, const char* where) {
    const json& v = require(j, key, where);
    if (!v.is_number())
        throw ValidationError(std::string("plan JSON: '") + key + "' in " + where +
                              " must be a number");
    return v.get<double>();
}

}  // namespace

std::string plan_to_json(const plan::MissionPlan& mission) {
    json days = json::array();
    for (const auto& day : mission.days) {
        json j = day_header_json(day);
        json visits = json::array();
        for (const auto& v : day.visits)
            visits.push_back(json{{"target", v.target},
                                  {"arrival", v.arrival_solar_time},
                                  {"dwell_s", v.dwell_s}});
        j["visits"] = std::move(visits);
        days.push_back(std::move(j));
    }
    const json root{{"site", mission.site_latitude_deg},
                    {"theta_max", mission.theta_max_deg},
                    {"days", std::move(days)},
                    {"unserved", mission.unserved}};
    return root.dump(2) + "\n";
}

plan::MissionPlan plan_from_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("plan JSON: ") + e.what());
    }
    if (!root.is_object()) throw ValidationError("plan JSON: top level must be an object");

    plan::MissionPlan mission;
    mission.site_latitude_deg = require_number(root, "site", "top level");
    mission.theta_max_deg = require_number(root, "theta_max", "top level");

    const json& days = require(root, "days", "top level");
    if (!days.is_array()) throw ValidationError("plan JSON: 'days' must be an array");
    int index = 0;
    for (const json& dj : days) {
        plan::DaySchedule day;
        day.day_index = ++index;
        const json& day_num = require(dj, "day", "a day entry");
        if (!day_num.is_number_integer())
            throw ValidationError("plan JSON: 'day' must be an integer");
        day.day_of_year = day_num.get<int>();

        const json& wj = require(dj, "window", "a day entry");
        const double start = require_number(wj, "start", "a window");
        const double end = require_number(wj, "end", "a window");
        day.window = solar::SolarWindow{end - start, start, end, mission.theta_max_deg};

        const json& mp = require(dj, "mapping_pass", "a day entry");
        if (!mp.is_null())
            day.mapping_pass =
                plan::MappingPass{require_number(mp, "start", "a mapping pass"),
                                  require_number(mp, "duration_h", "a mapping pass")};

        const json& visits = require(dj, "visits", "a day entry");
        if (!visits.is_array())
            throw ValidationError("plan JSON: 'visits' must be an array");
        for (const json& vj : visits) {
            const json& target = require(vj, "target", "a visit");
            if (!target.is_string())
                throw ValidationError("plan JSON: visit 'target' must be a string");
            day.visits.push_back(
                plan::Visit{target.get<std::string>(),
                            require_number(vj, "arrival", "a visit"),
                            require_number(vj, "dwell_s", "a visit")});
        }
        mission.days.push_back(std::move(day));
    }

    const json& unserved = require(root, "unserved", "top level");
    if (!unserved.is_array())
        throw ValidationError("plan JSON: 'unserved' must be an array");
    for (const json& u : unserved) {
        if (!u.is_string())
            throw ValidationError("plan JSON: 'unserved' entries must be strings");
        mission.unserved.push_back(u.get<std::string>());
    }

    mission.start_day_of_year =
        mission.days.empty() ? 1 : mission.days.front().day_of_year;
    return mission;
}

std::string report_to_json(const plan::SimulationReport& report) {
    json days = json::array();
    for (const auto& day : report.days) days.push_back(day_header_json(day));

    json outcomes = json::array();
    for (const auto& o : report.outcomes)
        outcomes.push_back(json{{"target", o.target},
                                {"day", o.day_of_year},
                                {"arrival", o.arrival_solar_time},
                                {"dwell_s", o.dwell_s},
                                {"integrated_dose_j_m2", o.integrated_dose_j_m2},
                                {"required_dose_j_m2", o.required_dose_j_m2},
                                {"result", o.result}});

    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back(json{{"code", v.code},
                                  {"target", v.target},
                                  {"day", v.day_of_year},
                                  {"detail", v.detail}});

    const json root{
        {"site", report.site_latitude_deg},
        {"theta_max", report.theta_max_deg},
        {"t_day_hours", report.t_day_hours},
        {"days", std::move(days)},
        {"outcomes", std::move(outcomes)},
        {"violations", std::move(violations)},
        {"unserved", report.unserved},
        {"totals",
         json{{"transit_distance_m", report.totals.transit_distance_m},
              {"creep_distance_m", report.totals.creep_distance_m},
              {"energy_on_target_j", report.totals.energy_on_target_j},
              {"available_window_hours", report.totals.available_window_hours}}}};
    return root.dump(2) + "\n";
}

std::string coverage_verdict_json(double t_total_hours, coverage::DaysRequired days,
                                  bool feasible_within) {
    const json root{{"t_total_hours", t_total_hours},
                    {"days_fractional", days.fractional},
                    {"days_whole", days.whole},
                    {"feasible_within", feasible_within}};
    return root.dump(2) + "\n";
}

}  // namespace helioweed::io
