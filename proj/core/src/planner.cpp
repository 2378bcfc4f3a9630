#include "helioweed/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "helioweed/angles.hpp"

namespace helioweed::plan {

std::string to_string(VerdictKind kind) {
    return kind == VerdictKind::SPARSE_FEASIBLE ? "SPARSE_FEASIBLE" : "DENSE_INFEASIBLE";
}

void Scenario::validate() const {
    field_map.validate();
    ugv.validate();
    lens.validate();
    footprint.validate();
    for (const auto& [name, sp] : species) {
        sp.validate();
        if (name != sp.name)
            throw ValidationError("species table key '" + name + "' does not match row name '" +
                                  sp.name + "'");
    }
    if (!(std::abs(site_latitude_deg) < 90.0))
        throw ValidationError("site latitude must be strictly inside [-90, 90]");
    if (!(theta_max_deg > 0.0 && theta_max_deg < 90.0))
        throw ValidationError("theta_max_deg outside (0, 90)");
    if (!(mapping_daylight_zenith_deg > theta_max_deg && mapping_daylight_zenith_deg < 90.0))
        throw ValidationError("mapping_daylight_zenith_deg must lie in (theta_max, 90)");
    if (start_day_of_year < 1 || start_day_of_year > 365)
        throw DayOutOfRange(start_day_of_year);
    if (horizon_days < 1) throw ValidationError("horizon_days must be >= 1");
    if (!(max_dwell_s > 0.0)) throw ValidationError("max_dwell_s must be > 0");
    if (!(t_day_hours > 0.0)) throw ValidationError("t_day_hours must be > 0");
}

int Scenario::day_of_year(int day_index) const {
    return (start_day_of_year + day_index - 2) % 365 + 1;
}

const dose::WeedSpecies& Scenario::species_ref(const std::string& name) const {
    const auto it = species.find(name);
    if (it == species.end())
        throw ValidationError("species '" + name + "' not present in the species table");
    return it->second;
}

namespace {

double ceil_ms(double seconds) { return std::ceil(seconds * 1000.0) / 1000.0; }

double distance(double ax, double ay, double bx, double by) {
    return std::hypot(bx - ax, by - ay);
}

/* Instantaneous delivered flux at the focal line, W/m^2. */
double instant_flux(const Scenario& sc, int day_of_year, double solar_time) {
    double theta_i = 0.0;
    if (!sc.compensate_tracking) {
        const double tz = solar::zenith_angle(solar::GeoLatitude(sc.site_latitude_deg),
                                              solar::declination_of_day(day_of_year),
                                              solar::HourAngle::from_solar_time(solar_time))
                              .deg();
        if (tz >= 90.0) return 0.0;
        theta_i = tz;
    }
    const double eta = optics::efficiency(optics::IncidenceAngle(theta_i), sc.lens).eta;
    return dose::DeliveredFlux{sc.dni.at(solar_time), eta}.flux_wm2();
}

/* Left-Riemann dose integral at 1 s steps with a fractional tail, J/m^2. */
double integrate_dose(const Scenario& sc, int day_of_year, double arrival_solar_time,
                      double dwell_s) {
    const long full = static_cast<long>(std::floor(dwell_s));
    const double tail = dwell_s - full;
    double dose = 0.0;
    for (long k = 0; k < full; ++k)
        dose += instant_flux(sc, day_of_year, arrival_solar_time + k / 3600.0);
    if (tail > 0.0)
        dose += instant_flux(sc, day_of_year, arrival_solar_time + full / 3600.0) * tail;
    return dose;
}

bool flat_flux(const Scenario& sc) { return sc.dni.is_constant() && sc.compensate_tracking; }

}  // namespace

std::optional<double> scheduled_dwell_on_day(const Scenario& sc,
                                             const dose::WeedSpecies& species,
                                             int day_of_year, double arrival_solar_time) {
    const double flux = instant_flux(sc, day_of_year, arrival_solar_time);
    if (!(flux > 0.0)) return std::nullopt;

    const dose::DwellRequirement req =
        dose::required_dwell(species, dose::DeliveredFlux{flux, 1.0}, sc.target_stage,
                             sc.max_dwell_s);
    if (!req.treatable) return std::nullopt;
    double dwell = ceil_ms(req.seconds);

    if (!flat_flux(sc)) {
        const double needed = species.reference_exposure_s * species.reference_flux_wm2 *
                              species.multiplier(sc.target_stage);
        for (int guard = 0; guard < 64; ++guard) {
            const double got = integrate_dose(sc, day_of_year, arrival_solar_time, dwell);
            if (got >= needed) break;
            const double f_end =
                instant_flux(sc, day_of_year, arrival_solar_time + dwell / 3600.0);
            if (!(f_end > 0.0)) return std::nullopt;
            dwell = ceil_ms(dwell + (needed - got) / f_end);
            if (dwell > sc.max_dwell_s + 0.002) return std::nullopt;
        }
    }
    if (dwell > sc.max_dwell_s + 0.002) return std::nullopt;
    return dwell;
}

double integrated_dose(const Scenario& sc, int day_of_year, double arrival_solar_time,
                       double dwell_s) {
    return integrate_dose(sc, day_of_year, arrival_solar_time, dwell_s);
}

MappingGeometry mapping_geometry(const field::FieldMap& fm, const field::UgvSpec& ugv) {
    fm.validate();
    ugv.validate();
    const double cross_extent = (fm.row_axis == 'x') ? fm.height_m : fm.width_m;
    const double row_length = (fm.row_axis == 'x') ? fm.width_m : fm.height_m;
    const int rows =
        std::max(1, static_cast<int>(std::ceil(cross_extent / fm.row_spacing_m - 1e-9)));
    const double path = rows * row_length;
    const double duration = path / ugv.transit_speed_mps + (rows - 1) * ugv.turn_time_s;
    return MappingGeometry{rows, path, duration};
}

MappingPass plan_mapping_pass(const field::FieldMap& fm, const field::UgvSpec& ugv,
                              const Scenario& scenario, int day_of_year) {
    const MappingGeometry geom = mapping_geometry(fm, ugv);
    const double duration_h = geom.duration_s / 3600.0;

    const solar::GeoLatitude site(scenario.site_latitude_deg);
    const solar::SolarDeclination delta = solar::declination_of_day(day_of_year);
    const solar::SolarWindow window =
        solar::solar_window(site, delta, scenario.theta_max_deg);
    const solar::SolarWindow daylight =
        solar::solar_window(site, delta, scenario.mapping_daylight_zenith_deg);

    const double morning_gap = window.start_solar_time - daylight.start_solar_time;
    const double evening_gap = daylight.end_solar_time - window.end_solar_time;

    if (duration_h <= morning_gap + 1e-12)
        return MappingPass{window.start_solar_time - duration_h, duration_h};
    if (duration_h <= evening_gap + 1e-12)
        return MappingPass{window.end_solar_time, duration_h};
    throw MappingDoesNotFit("day " + std::to_string(day_of_year) + ": pass needs " +
                            std::to_string(duration_h) + " h, daylight gaps are " +
                            std::to_string(morning_gap) + " h and " +
                            std::to_string(evening_gap) + " h");
}

namespace {

/* One day's routing state over indices into the shared target vector. */
class DayRouter {
public:
    DayRouter(const Scenario& sc, const std::vector<field::WeedTarget>& targets,
              int day_of_year, const solar::SolarWindow& window,
              const std::vector<int>& eligible)
        : sc_(sc),
          targets_(targets),
          day_(day_of_year),
          window_(window),
          eligible_(eligible),
          fast_(flat_flux(sc)) {
        if (fast_) precompute_dwells();
    }

    /* Nearest-neighbor take-if-fits, then 2-opt / cheapest-insertion to a
       fixed point.  Returns the ordered indices of the served targets. */
    std::vector<int> route() {
        construct();
        if (!order_.empty()) improve();
        return order_;
    }

    std::vector<Visit> visits() const {
        std::vector<Visit> out;
        out.reserve(order_.size());
        double t = window_.start_solar_time;
        double x = sc_.ugv.start_x_m, y = sc_.ugv.start_y_m;
        bool first = true;
        for (int idx : order_) {
            const auto& tg = targets_[idx];
            const double d = distance(x, y, tg.x_m, tg.y_m);
            const double arrival =
                first ? window_.start_solar_time : t + d / sc_.ugv.transit_speed_mps / 3600.0;
            const double dwell = *dwell_at(idx, arrival);
            out.push_back(Visit{tg.id, arrival, dwell});
            t = arrival + dwell / 3600.0;
            x = tg.x_m;
            y = tg.y_m;
            first = false;
        }
        return out;
    }

private:
    const Scenario& sc_;
    const std::vector<field::WeedTarget>& targets_;
    int day_;
    solar::SolarWindow window_;
    std::vector<int> eligible_;
    bool fast_;
    std::vector<int> order_;
    double end_time_ = 0.0;  // maintained by the fast-path moves
    std::vector<std::optional<double>> dwell_fixed_;  // per target index, fast path

    /* Constant flux makes the dwell a per-species constant; resolve each
       species once and fail fast on creep faster than transit. */
    void precompute_dwells() {
        std::map<std::string, std::optional<double>> by_species;
        dwell_fixed_.resize(targets_.size());
        for (int idx : eligible_) {
            const auto& sp = sc_.species_ref(targets_[idx].species);
            auto it = by_species.find(sp.name);
            if (it == by_species.end())
                it = by_species
                         .emplace(sp.name, scheduled_dwell_on_day(
                                               sc_, sp, day_, window_.start_solar_time))
                         .first;
            check_creep(idx, it->second);
            dwell_fixed_[idx] = it->second;
        }
    }

    void check_creep(int idx, const std::optional<double>& dwell) const {
        if (dwell && sc_.footprint.along_track_m / *dwell >
                         sc_.ugv.transit_speed_mps + 1e-12)
            throw ValidationError("target " + targets_[idx].id + ": creep speed " +
                                  std::to_string(sc_.footprint.along_track_m / *dwell) +
                                  " m/s exceeds the UGV transit speed");
    }

    std::optional<double> dwell_at(int idx, double arrival) const {
        if (fast_) return dwell_fixed_[idx];
        const auto& sp = sc_.species_ref(targets_[idx].species);
        const std::optional<double> dwell = scheduled_dwell_on_day(sc_, sp, day_, arrival);
        check_creep(idx, dwell);
        return dwell;
    }

    double dist_between(int a, int b) const {
        return distance(targets_[a].x_m, targets_[a].y_m, targets_[b].x_m, targets_[b].y_m);
    }
    double dist_from_start(int a) const {
        return distance(sc_.ugv.start_x_m, sc_.ugv.start_y_m, targets_[a].x_m,
                        targets_[a].y_m);
    }

    /* Walk an order; true when every visit completes inside the window.
       The leg from the start position runs before the window opens and
       costs no window time. */
    bool walk(const std::vector<int>& order, double& end_time) const {
        double t = window_.start_solar_time;
        double x = sc_.ugv.start_x_m, y = sc_.ugv.start_y_m;
        bool first = true;
        for (int idx : order) {
            const auto& tg = targets_[idx];
            const double d = distance(x, y, tg.x_m, tg.y_m);
            const double arrival =
                first ? window_.start_solar_time : t + d / sc_.ugv.transit_speed_mps / 3600.0;
            const std::optional<double> dwell = dwell_at(idx, arrival);
            if (!dwell) return false;
            if (arrival + *dwell / 3600.0 > window_.end_solar_time + 1e-9) return false;
            t = arrival + *dwell / 3600.0;
            x = tg.x_m;
            y = tg.y_m;
            first = false;
        }
        end_time = t;
        return true;
    }

    void construct() {
        std::vector<int> pending = eligible_;
        double t = window_.start_solar_time;
        double x = sc_.ugv.start_x_m, y = sc_.ugv.start_y_m;
        bool first = true;
        while (!pending.empty()) {
            int best_at = -1;
            double best_d = std::numeric_limits<double>::infinity();
            double best_dwell = 0.0, best_arrival = 0.0;
            for (int at = 0; at < static_cast<int>(pending.size()); ++at) {
                const int idx = pending[at];
                const double d = distance(x, y, targets_[idx].x_m, targets_[idx].y_m);
                if (best_at >= 0 && d > best_d + 1e-12) continue;
                const double arrival =
                    first ? window_.start_solar_time
                          : t + d / sc_.ugv.transit_speed_mps / 3600.0;
                const std::optional<double> dwell = dwell_at(idx, arrival);
                if (!dwell) continue;
                if (arrival + *dwell / 3600.0 > window_.end_solar_time + 1e-9) continue;
                const bool closer = d < best_d - 1e-12;
                const bool tie = std::abs(d - best_d) <= 1e-12 &&
                                 targets_[idx].id < targets_[pending[best_at]].id;
                if (best_at < 0 || closer || tie) {
                    best_at = at;
                    best_d = d;
                    best_dwell = *dwell;
                    best_arrival = arrival;
                }
            }
            if (best_at < 0) break;
            const int best = pending[best_at];
            order_.push_back(best);
            pending.erase(pending.begin() + best_at);
            t = best_arrival + best_dwell / 3600.0;
            x = targets_[best].x_m;
            y = targets_[best].y_m;
            first = false;
        }
        end_time_ = t;
    }

    /* 2-opt on transit distance with feasibility preserved, then cheapest
       insertion of still-pending targets; loop until neither moves. */
    void improve() {
        std::set<int> in_route(order_.begin(), order_.end());
        for (int rounds = 0; rounds < 50; ++rounds) {
            bool changed = false;
            changed |= fast_ ? two_opt_fast() : two_opt_checked();
            changed |= fast_ ? insert_pending_fast(in_route) : insert_pending_checked(in_route);
            if (!changed) break;
        }
    }

    bool two_opt_fast() {
        bool any = false;
        const int n = static_cast<int>(order_.size());
        bool improved = true;
        while (improved) {
            improved = false;
            for (int i = 0; i < n - 1 && !improved; ++i) {
                for (int j = i + 1; j < n && !improved; ++j) {
                    /* reverse order_[i..j]; only the legs touching the
                       segment ends change length */
                    const double before_i =
                        (i == 0) ? dist_from_start(order_[i])
                                 : dist_between(order_[i - 1], order_[i]);
                    const double new_before_i =
                        (i == 0) ? dist_from_start(order_[j])
                                 : dist_between(order_[i - 1], order_[j]);
                    const double after_j =
                        (j == n - 1) ? 0.0 : dist_between(order_[j], order_[j + 1]);
                    const double new_after_j =
                        (j == n - 1) ? 0.0 : dist_between(order_[i], order_[j + 1]);
                    const double delta_total =
                        new_before_i + new_after_j - before_i - after_j;
                    if (delta_total >= -1e-9) continue;
                    /* the start leg lies outside the window; its change
                       consumes no window time */
                    double delta_inner = delta_total;
                    if (i == 0) delta_inner -= new_before_i - before_i;
                    const double new_end =
                        end_time_ + delta_inner / sc_.ugv.transit_speed_mps / 3600.0;
                    if (new_end > window_.end_solar_time + 1e-9) continue;
                    std::reverse(order_.begin() + i, order_.begin() + j + 1);
                    end_time_ = new_end;
                    improved = true;
                    any = true;
                }
            }
        }
        return any;
    }

    bool two_opt_checked() {
        bool any = false;
        const int n = static_cast<int>(order_.size());
        double best_total = total_distance(order_);
        bool improved = true;
        while (improved) {
            improved = false;
            for (int i = 0; i < n - 1 && !improved; ++i) {
                for (int j = i + 1; j < n && !improved; ++j) {
                    std::vector<int> candidate = order_;
                    std::reverse(candidate.begin() + i, candidate.begin() + j + 1);
                    const double cand_total = total_distance(candidate);
                    if (cand_total >= best_total - 1e-9) continue;
                    double cand_end = 0.0;
                    if (!walk(candidate, cand_end)) continue;
                    order_ = std::move(candidate);
                    end_time_ = cand_end;
                    best_total = cand_total;
                    improved = true;
                    any = true;
                }
            }
        }
        return any;
    }

    bool insert_pending_fast(std::set<int>& in_route) {
        bool any = false;
        std::vector<int> remaining = remaining_sorted(in_route);
        for (int idx : remaining) {
            const std::optional<double> dwell = dwell_fixed_[idx];
            if (!dwell) continue;
            const double dwell_h = *dwell / 3600.0;
            if (end_time_ + dwell_h > window_.end_solar_time + 1e-9) continue;

            const int n = static_cast<int>(order_.size());
            int best_pos = -1;
            double best_added_total = std::numeric_limits<double>::infinity();
            double best_added_inner = 0.0;
            for (int pos = 0; pos <= n; ++pos) {
                double added_total = 0.0, added_inner = 0.0;
                if (n == 0) {
                    added_total = dist_from_start(idx);
                } else if (pos == 0) {
                    added_inner = dist_between(idx, order_[0]);
                    added_total = dist_from_start(idx) + added_inner -
                                  dist_from_start(order_[0]);
                } else if (pos == n) {
                    added_inner = dist_between(order_[n - 1], idx);
                    added_total = added_inner;
                } else {
                    added_inner = dist_between(order_[pos - 1], idx) +
                                  dist_between(idx, order_[pos]) -
                                  dist_between(order_[pos - 1], order_[pos]);
                    added_total = added_inner;
                }
                const double new_end =
                    end_time_ + dwell_h + added_inner / sc_.ugv.transit_speed_mps / 3600.0;
                if (new_end > window_.end_solar_time + 1e-9) continue;
                if (added_total < best_added_total - 1e-12) {
                    best_added_total = added_total;
                    best_pos = pos;
                    best_added_inner = added_inner;
                }
            }
            if (best_pos >= 0) {
                order_.insert(order_.begin() + best_pos, idx);
                end_time_ +=
                    dwell_h + best_added_inner / sc_.ugv.transit_speed_mps / 3600.0;
                in_route.insert(idx);
                any = true;
            }
        }
        return any;
    }

    bool insert_pending_checked(std::set<int>& in_route) {
        bool any = false;
        std::vector<int> remaining = remaining_sorted(in_route);
        for (int idx : remaining) {
            const int n = static_cast<int>(order_.size());
            int best_pos = -1;
            double best_added = std::numeric_limits<double>::infinity();
            double best_end = 0.0;
            const double base = total_distance(order_);
            for (int pos = 0; pos <= n; ++pos) {
                std::vector<int> candidate = order_;
                candidate.insert(candidate.begin() + pos, idx);
                double cand_end = 0.0;
                if (!walk(candidate, cand_end)) continue;
                const double added = total_distance(candidate) - base;
                if (added < best_added - 1e-12) {
                    best_added = added;
                    best_pos = pos;
                    best_end = cand_end;
                }
            }
            if (best_pos >= 0) {
                order_.insert(order_.begin() + best_pos, idx);
                end_time_ = best_end;
                in_route.insert(idx);
                any = true;
            }
        }
        return any;
    }

    std::vector<int> remaining_sorted(const std::set<int>& in_route) const {
        std::vector<int> remaining;
        for (int idx : eligible_)
            if (!in_route.count(idx)) remaining.push_back(idx);
        std::sort(remaining.begin(), remaining.end(),
                  [&](int a, int b) { return targets_[a].id < targets_[b].id; });
        return remaining;
    }

    double total_distance(const std::vector<int>& order) const {
        if (order.empty()) return 0.0;
        double d = dist_from_start(order[0]);
        for (size_t i = 1; i < order.size(); ++i)
            d += dist_between(order[i - 1], order[i]);
        return d;
    }
};

}  // namespace

MissionPlan plan_treatment(const std::vector<field::WeedTarget>& targets,
                           const Scenario& scenario) {
    scenario.validate();
    std::set<std::string> seen_ids;
    for (const auto& t : targets) {
        t.validate(scenario.field_map);
        scenario.species_ref(t.species);
        if (!seen_ids.insert(t.id).second)
            throw ValidationError("duplicate target id '" + t.id + "'");
    }

    const solar::GeoLatitude site(scenario.site_latitude_deg);
    std::vector<solar::SolarWindow> windows;
    windows.reserve(scenario.horizon_days);
    bool any_window = false;
    for (int k = 1; k <= scenario.horizon_days; ++k) {
        windows.push_back(solar::solar_window(
            site, solar::declination_of_day(scenario.day_of_year(k)),
            scenario.theta_max_deg));
        if (!windows.back().empty()) any_window = true;
    }
    if (!any_window)
        throw NoWindow("site latitude " + std::to_string(scenario.site_latitude_deg) +
                       ", theta_max " + std::to_string(scenario.theta_max_deg) + ", days " +
                       std::to_string(scenario.day_of_year(1)) + ".." +
                       std::to_string(scenario.day_of_year(scenario.horizon_days)));

    MissionPlan plan;
    plan.site_latitude_deg = scenario.site_latitude_deg;
    plan.theta_max_deg = scenario.theta_max_deg;
    plan.start_day_of_year = scenario.start_day_of_year;

    std::set<int> pending;
    for (int i = 0; i < static_cast<int>(targets.size()); ++i) pending.insert(i);

    for (int k = 1; k <= scenario.horizon_days && !pending.empty(); ++k) {
        const solar::SolarWindow& window = windows[k - 1];
        if (window.empty()) continue;
        std::vector<int> eligible;
        for (int idx : pending)
            if (targets[idx].detected_day <= k) eligible.push_back(idx);
        if (eligible.empty()) continue;

        const int day = scenario.day_of_year(k);
        DayRouter router(scenario, targets, day, window, eligible);
        const std::vector<int> served = router.route();
        if (served.empty()) continue;

        DaySchedule sched;
        sched.day_of_year = day;
        sched.day_index = k;
        sched.window = window;
        sched.visits = router.visits();
        sched.mapping_pass =
            plan_mapping_pass(scenario.field_map, scenario.ugv, scenario, day);
        plan.days.push_back(std::move(sched));

        for (int idx : served) pending.erase(idx);
    }

    for (int idx : pending) plan.unserved.push_back(targets[idx].id);
    std::sort(plan.unserved.begin(), plan.unserved.end());
    return plan;
}

Verdict feasibility_verdict(const std::vector<field::WeedTarget>& targets,
                            const Scenario& scenario) {
    Verdict verdict;
    verdict.plan = plan_treatment(targets, scenario);
    verdict.targets_total = static_cast<int>(targets.size());
    verdict.served = verdict.targets_total - static_cast<int>(verdict.plan.unserved.size());
    verdict.kind = verdict.plan.unserved.empty() ? VerdictKind::SPARSE_FEASIBLE
                                                 : VerdictKind::DENSE_INFEASIBLE;

    const double noon_flux = instant_flux(scenario, scenario.day_of_year(1), 12.0);
    double dwell_hours = 0.0;
    if (noon_flux > 0.0) {
        for (const auto& t : targets) {
            const auto& sp = scenario.species_ref(t.species);
            dwell_hours += sp.reference_exposure_s * sp.reference_flux_wm2 *
                           sp.multiplier(scenario.target_stage) / noon_flux / 3600.0;
        }
    }
    verdict.required_dwell_hours = dwell_hours;

    double window_hours = 0.0;
    const solar::GeoLatitude site(scenario.site_latitude_deg);
    for (int k = 1; k <= scenario.horizon_days; ++k)
        window_hours += solar::solar_window(
                            site, solar::declination_of_day(scenario.day_of_year(k)),
                            scenario.theta_max_deg)
                            .delta_t_hours;
    verdict.available_window_hours = window_hours;
    return verdict;
}

}  // namespace helioweed::plan
