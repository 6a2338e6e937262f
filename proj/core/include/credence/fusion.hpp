#pragma once

#include <optional>
#include <vector>

#include "credence/detection.hpp"
#include "credence/dynamics.hpp"

namespace credence::fusion {

enum class Hypothesis { h0, h1 };

/// Per-cluster local error probabilities and cluster sizes. Agents within a
/// cluster share one detector operating point; agents across the whole
/// profile decide independently.
struct ClusterErrorProfile {
    std::vector<int> sizes;
    std::vector<ErrorPair> errors;

    ClusterErrorProfile() = default;
    ClusterErrorProfile(std::vector<int> sizes, std::vector<ErrorPair> errors);

    int total_agents() const;
};

/// Distribution of the number of h1 votes out of n agents under one
/// hypothesis; probabilities[k] = P(exactly k vote h1).
struct VoteCountDistribution {
    std::vector<double> probabilities;

    int max_count() const { return static_cast<int>(probabilities.size()) - 1; }
};

/// Exact convolution of per-cluster binomial vote counts. Under h0 cluster k
/// contributes Binomial(n_k, pI_k) votes for h1; under h1, Binomial(n_k,
/// 1 - pII_k).
VoteCountDistribution vote_distribution(const ClusterErrorProfile& profile, Hypothesis hypothesis);

/// Global error probabilities of the count-threshold rule that decides h1
/// iff at least `decide_h1_from` agents vote h1. Thresholds at or below 0
/// give the constant-h1 rule; above the agent count, the constant-h0 rule.
ErrorPair threshold_vote_errors(const ClusterErrorProfile& profile, int decide_h1_from);

/// Global error probabilities of the majority vote (ties decide h1):
/// pI = P(votes >= ceil(n/2) | h0), pII = P(votes < ceil(n/2) | h1).
ErrorPair majority_vote_errors(const ClusterErrorProfile& profile);

/// Evaluates each cluster weight as a detector operating point for the given
/// problem.
ClusterErrorProfile profile_from_clusters(const dynamics::ClusterSummary& clusters,
                                          const DetectionProblem& problem);

/// Bayes risk of the majority vote across converged clusters, weighted by
/// the true prior and costs.
double aggregate_bayes_risk(const dynamics::ClusterSummary& clusters,
                            const DetectionProblem& problem);

/// Bayes-optimal risk given all n observations jointly. The sum of the
/// observations is a sufficient statistic, so this reduces to a single
/// detector with means n*mu0 / n*mu1 and noise sigma*sqrt(n).
double centralized_bayes_risk(int n, const DetectionProblem& problem);

/// Majority vote of n identical detectors using the Bayes-optimal local
/// weight a = p0.
double optimal_majority_risk(int n, const DetectionProblem& problem);

/// Chair-Varshney fusion threshold over n identical Bayes-optimal local
/// detectors. Throws DegenerateFusionError when the local operating point is
/// uninformative (pI + pII = 1) or saturated past double precision.
double chair_varshney_gamma(int n, const DetectionProblem& problem);

/// Same threshold from explicitly supplied local error probabilities.
double chair_varshney_gamma(int n, double p0, const CostPair& costs, const ErrorPair& local);

/// Bayes risk of the Chair-Varshney rule: votes >= ceil(gamma) decide h1,
/// with ceil(gamma) clamped into [0, n+1] (constant decisions beyond).
double chair_varshney_risk(int n, const DetectionProblem& problem);

/// Aggregate performance of a converged population against the optimal
/// centralized and decentralized baselines. chair_varshney_risk is absent
/// when the fusion threshold is degenerate.
struct RiskReport {
    double aggregate_risk = 0.0;
    double centralized_risk = 0.0;
    double optimal_majority_risk = 0.0;
    std::optional<double> chair_varshney_risk{};
    double aggregate_bre = 0.0; ///< aggregate_risk - centralized_risk
};

RiskReport make_risk_report(const dynamics::ClusterSummary& clusters,
                            const DetectionProblem& problem);

} // namespace credence::fusion
