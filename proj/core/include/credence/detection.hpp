#pragma once

#include "credence/errors.hpp"

namespace credence {

/// Scalar Gaussian shift model: the observation is N(mu0, sigma^2) under h0
/// and N(mu1, sigma^2) under h1, with mu1 > mu0.
struct GaussianModel {
    double mu0 = 0.0;
    double mu1 = 1.0;
    double sigma = 1.0;

    GaussianModel() = default;
    GaussianModel(double mu0, double mu1, double sigma);
};

/// Error costs of the binary decision. Correct decisions cost zero.
struct CostPair {
    double c10 = 1.0; ///< cost of a false alarm (deciding h1 under h0)
    double c01 = 1.0; ///< cost of a miss (deciding h0 under h1)

    CostPair() = default;
    CostPair(double c10, double c01);
};

/// A complete binary detection problem: true prior of h0 (p1 = 1 - p0 is
/// implicit), error costs, and the observation model.
struct DetectionProblem {
    double p0 = 0.5;
    CostPair costs{};
    GaussianModel model{};

    DetectionProblem() = default;
    DetectionProblem(double p0, const CostPair& costs, const GaussianModel& model);
};

/// Type I / Type II error probabilities of a decision rule.
struct ErrorPair {
    double false_alarm = 0.0; ///< Type I: P(decide h1 | h0)
    double miss = 0.0;        ///< Type II: P(decide h0 | h1)
};

/// Standard normal CDF. Absolute error below 1e-12 over the whole real line.
double std_normal_cdf(double x);

/// log of the standard normal CDF, finite and accurate far into the lower
/// tail where std_normal_cdf underflows.
double log_std_normal_cdf(double x);

/// Observation-space threshold of the likelihood ratio test with decision
/// weight `weight` placed on h0: decide h1 iff y > threshold. Returns -inf
/// when weight = 0 (always h1) and +inf when weight = 1 (always h0).
double lrt_threshold(double weight, const CostPair& costs, const GaussianModel& model);

/// Type I / Type II error probabilities of the threshold test at `weight`.
ErrorPair error_probabilities(double weight, const CostPair& costs, const GaussianModel& model);

/// Expected cost of the rule with decision weight `weight` when the true
/// prior of h0 is `p0`: c10 * p0 * pI(weight) + c01 * (1 - p0) * pII(weight).
double bayes_risk(double p0, double weight, const CostPair& costs, const GaussianModel& model);

/// Bayes risk error divergence d(p, weight) = J(p, weight) - J(p, p).
/// Nonnegative; zero iff weight achieves the matched-weight risk. Negative
/// values beyond floating-point noise raise InternalConsistencyError.
double bre_divergence(double p, double weight, const CostPair& costs, const GaussianModel& model);

} // namespace credence
