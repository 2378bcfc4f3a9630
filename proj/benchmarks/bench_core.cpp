#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "helioweed/dose.hpp"
#include "helioweed/optics.hpp"
#include "helioweed/planner.hpp"
#include "helioweed/solar.hpp"

using namespace helioweed;

namespace {

static void BM_WindowClosedForm(benchmark::State& state) {
    const solar::GeoLatitude phi(7.0);
    const solar::SolarDeclination delta(7.53);
    for (auto _ : state)
        benchmark::DoNotOptimize(solar::solar_window(phi, delta, 25.0).delta_t_hours);
}
BENCHMARK(BM_WindowClosedForm);

static void BM_WindowSecondScan(benchmark::State& state) {
    const solar::GeoLatitude phi(7.0);
    const solar::SolarDeclination delta(7.53);
    for (auto _ : state)
        benchmark::DoNotOptimize(solar::scan_window_oracle(phi, delta, 25.0, 1.0));
}
BENCHMARK(BM_WindowSecondScan)->Unit(benchmark::kMillisecond);

static void BM_WindowSurface(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solar::window_surface(25.0, 4.69));
}
BENCHMARK(BM_WindowSurface);

static void BM_EfficiencyCurve(benchmark::State& state) {
    const optics::LensSpec lens{1.2, 0.9, 1.49, 0.9, 50.0, "cosine"};
    for (auto _ : state) benchmark::DoNotOptimize(optics::efficiency_curve(lens, 1.0));
}
BENCHMARK(BM_EfficiencyCurve);

static void BM_RequiredDwell(benchmark::State& state) {
    const dose::WeedSpecies sp{"amaranthus_retroflexus", 20.0, 37000.0, 1.5};
    const dose::DeliveredFlux flux{900.0, 41.58};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            dose::required_dwell(sp, flux, dose::Stage::seedling).seconds);
}
BENCHMARK(BM_RequiredDwell);

plan::Scenario bench_scenario() {
    plan::Scenario sc;
    sc.field_map = field::FieldMap{0.0, 0.0, 40.0, 25.0, 2.0, 'x'};
    sc.ugv = field::UgvSpec{0.5, 5.0, 0.0, 0.0};
    sc.lens = optics::LensSpec{1.2, 0.9, 1.49, 0.9, 50.0, "cosine"};
    sc.footprint = coverage::Footprint{0.05, 0.10};
    sc.species["amaranthus_retroflexus"] =
        dose::WeedSpecies{"amaranthus_retroflexus", 20.0, 37000.0, 1.5};
    sc.site_latitude_deg = 7.0;
    sc.start_day_of_year = 100;
    sc.horizon_days = 30;
    return sc;
}

static void BM_PlanTreatment(benchmark::State& state) {
    const plan::Scenario sc = bench_scenario();
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> xd(0.5, 39.5), yd(0.5, 24.5);
    std::vector<field::WeedTarget> targets;
    for (int i = 0; i < state.range(0); ++i)
        targets.push_back(field::WeedTarget{"t" + std::to_string(i), xd(rng), yd(rng),
                                            "amaranthus_retroflexus", 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(plan::plan_treatment(targets, sc).days.size());
}
BENCHMARK(BM_PlanTreatment)->Arg(20)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
