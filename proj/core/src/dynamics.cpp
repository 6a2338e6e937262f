#include "credence/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace credence::dynamics {

ProximityMeasure ProximityMeasure::absolute_error() {
    ProximityMeasure m;
    m.kind = Kind::AbsoluteError;
    return m;
}

ProximityMeasure ProximityMeasure::bayes_risk_error(const CostPair& costs,
                                                    const GaussianModel& model) {
    ProximityMeasure m;
    m.kind = Kind::BayesRiskError;
    m.costs = costs;
    m.model = model;
    return m;
}

double ProximityMeasure::operator()(double own, double other) const {
    if (kind == Kind::AbsoluteError) {
        return std::fabs(own - other);
    }
    return bre_divergence(own, other, costs, model);
}

Population::Population(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("Population: need at least one agent");
    }
    for (double w : weights_) {
        if (!(w >= 0.0) || !(w <= 1.0)) {
            throw std::invalid_argument("Population: weights must lie in [0, 1]");
        }
    }
}

void DynamicsConfig::validate() const {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::invalid_argument("DynamicsConfig: theta must be positive");
    }
    if (max_steps < 1) {
        throw std::invalid_argument("DynamicsConfig: max_steps must be positive");
    }
    if (!(fixed_point_tol >= 0.0) || !(cluster_tol >= fixed_point_tol)) {
        throw std::invalid_argument(
            "DynamicsConfig: need 0 <= fixed_point_tol <= cluster_tol");
    }
}

std::vector<std::size_t> neighborhood(std::size_t i, const Population& pop, double theta,
                                      const ProximityMeasure& measure) {
    if (i >= pop.size()) {
        throw std::invalid_argument("neighborhood: agent index out of range");
    }
    if (!(theta > 0.0)) {
        throw std::invalid_argument("neighborhood: theta must be positive");
    }
    const double own = pop[i];
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < pop.size(); ++j) {
        if (measure(own, pop[j]) <= theta) {
            members.push_back(j);
        }
    }
    return members;
}

namespace {

// Same arithmetic as bre_divergence, with the error probabilities of both
// arguments precomputed. Keeping the expression shape identical makes the
// fast per-step path agree bit-for-bit with the public function.
double divergence_from_parts(double own, const ErrorPair& at_own, const ErrorPair& at_other,
                             const CostPair& costs) {
    const double j_other =
        costs.c10 * own * at_other.false_alarm + costs.c01 * (1.0 - own) * at_other.miss;
    const double j_own =
        costs.c10 * own * at_own.false_alarm + costs.c01 * (1.0 - own) * at_own.miss;
    const double excess = j_other - j_own;
    if (excess < 0.0) {
        if (excess < -1e-12) {
            throw InternalConsistencyError(
                "dynamics: negative divergence " + std::to_string(excess));
        }
        return 0.0;
    }
    return excess;
}

} // namespace

Population step(const Population& pop, const DynamicsConfig& config) {
    config.validate();
    const std::size_t n = pop.size();
    const bool bre = config.measure.kind == ProximityMeasure::Kind::BayesRiskError;

    // Neighbor sums run over the value-sorted multiset so the result does not
    // depend on agent ordering (permutation equivariance is exact).
    std::vector<double> sorted = pop.weights();
    std::sort(sorted.begin(), sorted.end());

    std::vector<ErrorPair> sorted_errors;
    if (bre) {
        sorted_errors.reserve(n);
        for (double w : sorted) {
            sorted_errors.push_back(error_probabilities(w, config.measure.costs, config.measure.model));
        }
    }

    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double own = pop[i];
        const ErrorPair own_errors =
            bre ? error_probabilities(own, config.measure.costs, config.measure.model)
                : ErrorPair{};

        double sum = 0.0;
        std::size_t count = 0;
        double lo = 0.0;
        double hi = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double prox =
                bre ? divergence_from_parts(own, own_errors, sorted_errors[k], config.measure.costs)
                    : std::fabs(own - sorted[k]);
            if (prox <= config.theta) {
                if (count == 0) {
                    lo = sorted[k];
                }
                hi = sorted[k];
                sum += sorted[k];
                ++count;
            }
        }
        // An agent always sees itself, so count >= 1. The clamp only repairs
        // last-ulp rounding of the mean; the true mean lies in [lo, hi].
        next[i] = std::clamp(sum / static_cast<double>(count), lo, hi);
    }
    return Population(std::move(next));
}

Trajectory run_dynamics(const Population& initial, const DynamicsConfig& config) {
    config.validate();
    Trajectory traj;
    traj.snapshots.push_back(initial);
    for (int k = 0; k < config.max_steps; ++k) {
        const Population& current = traj.snapshots.back();
        Population next = step(current, config);
        double delta = 0.0;
        for (std::size_t j = 0; j < next.size(); ++j) {
            delta = std::max(delta, std::fabs(next[j] - current[j]));
        }
        traj.snapshots.push_back(std::move(next));
        if (delta <= config.fixed_point_tol) {
            traj.converged = true;
            traj.steps_to_convergence = k;
            return traj;
        }
    }
    throw NonConvergenceError("run_dynamics: no fixed point within " +
                              std::to_string(config.max_steps) + " steps");
}

ClusterSummary detect_clusters(const Population& pop, double cluster_tol) {
    if (!(cluster_tol >= 0.0)) {
        throw std::invalid_argument("detect_clusters: cluster_tol must be nonnegative");
    }
    std::vector<double> sorted = pop.weights();
    std::sort(sorted.begin(), sorted.end());

    ClusterSummary summary;
    std::size_t start = 0;
    for (std::size_t k = 1; k <= sorted.size(); ++k) {
        if (k == sorted.size() || sorted[k] - sorted[k - 1] > cluster_tol) {
            double sum = 0.0;
            for (std::size_t j = start; j < k; ++j) {
                sum += sorted[j];
            }
            summary.weights.push_back(sum / static_cast<double>(k - start));
            summary.sizes.push_back(static_cast<int>(k - start));
            start = k;
        }
    }
    return summary;
}

} // namespace credence::dynamics
