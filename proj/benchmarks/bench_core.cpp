#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "credence/detection.hpp"
#include "credence/dynamics.hpp"
#include "credence/experiments.hpp"
#include "credence/fusion.hpp"

namespace {

using namespace credence;
namespace dyn = credence::dynamics;
namespace xp = credence::experiments;
namespace fus = credence::fusion;

const CostPair kUnitCosts(1.0, 1.0);

dyn::Population uniform_population(int n, std::uint64_t seed) {
    return xp::sample_initial_weights(xp::InitialDistribution::uniform01(), n, seed);
}

void BM_Divergence(benchmark::State& state) {
    const GaussianModel model(0.0, 1.0, 4.0);
    double p = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bre_divergence(p, 1.0 - p, kUnitCosts, model));
        p = p < 0.9 ? p + 1e-4 : 0.1;
    }
}
BENCHMARK(BM_Divergence);

void BM_Step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const dyn::Population pop = uniform_population(n, 7);
    dyn::DynamicsConfig config;
    config.theta = 0.1;
    config.measure = dyn::ProximityMeasure::bayes_risk_error(kUnitCosts, GaussianModel(0.0, 1.0, 4.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dyn::step(pop, config));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Step)->Arg(101)->Arg(401)->Arg(1001)->Complexity();

void BM_RunDynamics(benchmark::State& state) {
    const dyn::Population pop = uniform_population(101, 7);
    dyn::DynamicsConfig config;
    config.theta = 0.1;
    config.measure = dyn::ProximityMeasure::bayes_risk_error(kUnitCosts, GaussianModel(0.0, 1.0, 4.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dyn::run_dynamics(pop, config));
    }
}
BENCHMARK(BM_RunDynamics);

void BM_VoteDistribution(benchmark::State& state) {
    const fus::ClusterErrorProfile profile({34, 33, 34},
                                           {{0.3, 0.4}, {0.45, 0.45}, {0.2, 0.6}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(fus::vote_distribution(profile, fus::Hypothesis::h0));
    }
}
BENCHMARK(BM_VoteDistribution);

void BM_Trial(benchmark::State& state) {
    xp::ExperimentPlan plan;
    plan.theta = 0.1;
    plan.sigma_grid = {4.0};
    plan.trials = 1;
    plan.base_seed = 7;
    int trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xp::run_trial(plan, 4.0, trial++ % 1000));
    }
}
BENCHMARK(BM_Trial);

} // namespace

BENCHMARK_MAIN();
