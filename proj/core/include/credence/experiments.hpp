#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "credence/dynamics.hpp"
#include "credence/fusion.hpp"

namespace credence::experiments {

/// Distribution of the initial decision weights over [0, 1].
struct InitialDistribution {
    enum class Kind { Uniform01, Beta };

    Kind kind = Kind::Uniform01;
    double alpha = 1.0; // Beta only
    double beta = 1.0;  // Beta only

    static InitialDistribution uniform01();
    static InitialDistribution beta_distribution(double alpha, double beta);

    double mean() const;
};

/// A full sweep description: one population shape, one detection setup, a
/// noise grid, and the trial count per grid point.
struct ExperimentPlan {
    int n = 101;
    double theta = 0.1;
    InitialDistribution distribution{};
    double true_p0 = 0.5;
    CostPair costs{};
    std::vector<double> sigma_grid;
    int trials = 200;
    std::uint64_t base_seed = 0;

    void validate() const;

    /// Non-fatal oddities, e.g. true_p0 not matching the mean of the initial
    /// distribution. Exploring such mismatches is allowed, so these warn
    /// rather than fail validation.
    std::vector<std::string> warnings() const;
};

/// What one trial produced.
struct TrialOutcome {
    dynamics::ClusterSummary clusters;
    int steps = 0;
    fusion::RiskReport report{};
};

/// Per-trial scalars retained by a sweep so the aggregate statistics can be
/// recomputed and audited.
struct TrialRecord {
    int cluster_count = 0;
    int steps = 0;
    double aggregate_risk = 0.0;
    double aggregate_bre = 0.0;
};

/// Aggregates for one grid point. Standard deviations are population
/// standard deviations over the trials (zero for a single trial). The three
/// baseline risks do not depend on the trial draw.
struct SweepRecord {
    double sigma = 0.0;
    double mean_clusters = 0.0;
    double std_clusters = 0.0;
    double mean_steps = 0.0;
    double std_steps = 0.0;
    double mean_aggregate_risk = 0.0;
    double std_aggregate_risk = 0.0;
    double centralized_risk = 0.0;
    double optimal_majority_risk = 0.0;
    std::optional<double> chair_varshney_risk{};
    double mean_aggregate_bre = 0.0;
    double std_aggregate_bre = 0.0;
};

struct SweepResult {
    std::vector<SweepRecord> records;                // one per grid point, grid order
    std::vector<std::vector<TrialRecord>> trials;    // trials[sigma_index][trial_index]
};

/// Seed for one trial:
///   mix64(mix64(mix64(base_seed) ^ (sigma_index + 1)) ^ (trial_index + 1))
/// so any single trial is reproducible in isolation.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t sigma_index, int trial_index);

/// Deterministic i.i.d. draw of n initial weights. Uniform01 maps raw 64-bit
/// words to [0, 1); Beta(alpha, 1) uses the closed-form inverse CDF u^(1/alpha)
/// (and the mirrored form for Beta(1, beta)); other Beta shapes use Johnk's
/// uniform-ratio method.
dynamics::Population sample_initial_weights(const InitialDistribution& distribution, int n,
                                            std::uint64_t seed);

/// One seeded trial at `sigma` (which must be a grid point of the plan):
/// sample initial weights, run the bounded-confidence dynamics with the
/// Bayes-risk-error neighborhood, extract clusters, and score the result
/// against the true prior.
TrialOutcome run_trial(const ExperimentPlan& plan, double sigma, int trial_index);

/// All trials over the whole grid. Trials are independent and may run on
/// `jobs` threads; aggregation is a fixed-order reduction, so the result is
/// identical for any job count.
SweepResult run_sweep(const ExperimentPlan& plan, unsigned jobs = 1);

} // namespace credence::experiments
