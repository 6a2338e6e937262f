#pragma once

#include <cstddef>
#include <vector>

#include "credence/detection.hpp"

namespace credence::dynamics {

/// How the distance from one agent's decision weight to another's is
/// measured when forming bounded-confidence neighborhoods.
struct ProximityMeasure {
    enum class Kind {
        AbsoluteError,  ///< |own - other|
        BayesRiskError, ///< d(own, other), own as the first divergence argument
    };

    Kind kind = Kind::AbsoluteError;
    CostPair costs{};      // BayesRiskError only
    GaussianModel model{}; // BayesRiskError only

    static ProximityMeasure absolute_error();
    static ProximityMeasure bayes_risk_error(const CostPair& costs, const GaussianModel& model);

    /// Proximity of `other` as seen from `own`. Asymmetric in BRE mode.
    double operator()(double own, double other) const;
};

/// Ordered vector of per-agent decision weights; indices are stable agent
/// identities. Weights must lie in [0, 1] and there must be at least one.
class Population {
public:
    explicit Population(std::vector<double> weights);

    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }

private:
    std::vector<double> weights_;
};

struct DynamicsConfig {
    double theta = 0.1; ///< confidence threshold, > 0
    ProximityMeasure measure{};
    int max_steps = 10000;
    double fixed_point_tol = 1e-12; ///< per-agent change declaring a fixed point
    double cluster_tol = 1e-6;      ///< weight gap separating converged clusters

    void validate() const;
};

/// Full record of one run: every synchronous state from the initial
/// population through the confirming step.
struct Trajectory {
    std::vector<Population> snapshots;
    bool converged = false;
    /// Index of the first step whose output matched its input within
    /// fixed_point_tol, i.e. the number of state-changing steps. The
    /// confirming step itself is recorded in `snapshots` but not counted.
    int steps_to_convergence = 0;

    const Population& initial() const { return snapshots.front(); }
    const Population& final_state() const { return snapshots.back(); }
};

/// Converged clusters: strictly increasing representative weights and the
/// number of agents in each.
struct ClusterSummary {
    std::vector<double> weights;
    std::vector<int> sizes;

    int count() const { return static_cast<int>(weights.size()); }
};

/// Agents within `theta` of agent i under `measure`, i included. Indices
/// ascending.
std::vector<std::size_t> neighborhood(std::size_t i, const Population& pop, double theta,
                                      const ProximityMeasure& measure);

/// One synchronous update: every agent simultaneously moves to the mean of
/// its neighborhood in the current state.
Population step(const Population& pop, const DynamicsConfig& config);

/// Iterates `step` until a fixed point (per-agent change <= fixed_point_tol)
/// or throws NonConvergenceError after max_steps.
Trajectory run_dynamics(const Population& initial, const DynamicsConfig& config);

/// Groups sorted weights into clusters split where adjacent weights differ
/// by more than cluster_tol; each cluster's weight is the mean of its
/// members. Intended for converged states.
ClusterSummary detect_clusters(const Population& pop, double cluster_tol);

} // namespace credence::dynamics
