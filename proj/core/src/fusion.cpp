#include "credence/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace credence::fusion {

namespace {

// Binomial pmf over counts 0..n, evaluated in log space so n around 100
// stays accurate into both tails. The failure probability q is passed at
// full precision alongside p (the caller knows which of the two is the
// primary quantity), which keeps Bernoulli rows exact.
std::vector<double> binomial_pmf(int n, double p, double q) {
    std::vector<double> pmf(static_cast<std::size_t>(n) + 1, 0.0);
    if (p <= 0.0) {
        pmf.front() = 1.0;
        return pmf;
    }
    if (q <= 0.0) {
        pmf.back() = 1.0;
        return pmf;
    }
    if (n == 1) {
        pmf = {q, p};
        return pmf;
    }
    const double log_p = std::log(p);
    const double log_q = std::log(q);
    const double log_n_fact = std::lgamma(static_cast<double>(n) + 1.0);
    for (int k = 0; k <= n; ++k) {
        const double log_choose = log_n_fact - std::lgamma(static_cast<double>(k) + 1.0) -
                                  std::lgamma(static_cast<double>(n - k) + 1.0);
        pmf[static_cast<std::size_t>(k)] = std::exp(log_choose + k * log_p + (n - k) * log_q);
    }
    return pmf;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Kahan-compensated sum of probabilities[from..] (tail) or [..from) (head).
double tail_sum(const std::vector<double>& probabilities, int from) {
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t k = static_cast<std::size_t>(std::max(from, 0)); k < probabilities.size(); ++k) {
        const double y = probabilities[k] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double head_sum(const std::vector<double>& probabilities, int before) {
    double sum = 0.0;
    double comp = 0.0;
    const std::size_t stop = static_cast<std::size_t>(
        std::clamp(before, 0, static_cast<int>(probabilities.size())));
    for (std::size_t k = 0; k < stop; ++k) {
        const double y = probabilities[k] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

int majority_threshold(int n) {
    return (n + 1) / 2; // ceil(n/2); a tie at exactly n/2 votes decides h1
}

double combine_risk(double p0, const CostPair& costs, const ErrorPair& global) {
    return costs.c10 * p0 * global.false_alarm + costs.c01 * (1.0 - p0) * global.miss;
}

ClusterErrorProfile single_cluster(int n, const ErrorPair& errors) {
    return ClusterErrorProfile({n}, {errors});
}

// gamma = (log(p0 c10 / ((1-p0) c01)) - n (lc - la)) / ((la + ld) - (lb + lc))
// with la = log(1-pI), lb = log(pI), lc = log(pII), ld = log(1-pII).
double gamma_from_logs(int n, double p0, const CostPair& costs, double la, double lb, double lc,
                       double ld) {
    const double numerator =
        std::log(p0 * costs.c10) - std::log((1.0 - p0) * costs.c01) - n * (lc - la);
    const double denominator = (la + ld) - (lb + lc);
    if (!std::isfinite(numerator) || !std::isfinite(denominator) || denominator == 0.0) {
        throw DegenerateFusionError(
            "chair_varshney_gamma: undefined fusion threshold (uninformative or "
            "saturated local detectors)");
    }
    return numerator / denominator;
}

} // namespace

ClusterErrorProfile::ClusterErrorProfile(std::vector<int> sizes_, std::vector<ErrorPair> errors_)
    : sizes(std::move(sizes_)), errors(std::move(errors_)) {
    if (sizes.empty() || sizes.size() != errors.size()) {
        throw std::invalid_argument("ClusterErrorProfile: need matching, nonempty sizes and errors");
    }
    for (int s : sizes) {
        if (s < 1) {
            throw std::invalid_argument("ClusterErrorProfile: cluster sizes must be positive");
        }
    }
    for (const ErrorPair& e : errors) {
        if (!(e.false_alarm >= 0.0) || !(e.false_alarm <= 1.0) || !(e.miss >= 0.0) ||
            !(e.miss <= 1.0)) {
            throw std::invalid_argument("ClusterErrorProfile: error probabilities must lie in [0, 1]");
        }
    }
}

int ClusterErrorProfile::total_agents() const {
    int total = 0;
    for (int s : sizes) {
        total += s;
    }
    return total;
}

ErrorPair threshold_vote_errors(const ClusterErrorProfile& profile, int decide_h1_from) {
    const VoteCountDistribution under_h0 = vote_distribution(profile, Hypothesis::h0);
    const VoteCountDistribution under_h1 = vote_distribution(profile, Hypothesis::h1);
    return {tail_sum(under_h0.probabilities, decide_h1_from),
            head_sum(under_h1.probabilities, decide_h1_from)};
}

VoteCountDistribution vote_distribution(const ClusterErrorProfile& profile, Hypothesis hypothesis) {
    std::vector<double> dist{1.0};
    for (std::size_t k = 0; k < profile.sizes.size(); ++k) {
        const std::vector<double> pmf =
            hypothesis == Hypothesis::h0
                ? binomial_pmf(profile.sizes[k], profile.errors[k].false_alarm,
                               1.0 - profile.errors[k].false_alarm)
                : binomial_pmf(profile.sizes[k], 1.0 - profile.errors[k].miss,
                               profile.errors[k].miss);
        dist = convolve(dist, pmf);
    }
    return {std::move(dist)};
}

ErrorPair majority_vote_errors(const ClusterErrorProfile& profile) {
    return threshold_vote_errors(profile, majority_threshold(profile.total_agents()));
}

ClusterErrorProfile profile_from_clusters(const dynamics::ClusterSummary& clusters,
                                          const DetectionProblem& problem) {
    std::vector<ErrorPair> errors;
    errors.reserve(clusters.weights.size());
    for (double weight : clusters.weights) {
        errors.push_back(error_probabilities(weight, problem.costs, problem.model));
    }
    return ClusterErrorProfile(clusters.sizes, std::move(errors));
}

double aggregate_bayes_risk(const dynamics::ClusterSummary& clusters,
                            const DetectionProblem& problem) {
    const ErrorPair global = majority_vote_errors(profile_from_clusters(clusters, problem));
    return combine_risk(problem.p0, problem.costs, global);
}

double centralized_bayes_risk(int n, const DetectionProblem& problem) {
    if (n < 1) {
        throw std::invalid_argument("centralized_bayes_risk: n must be positive");
    }
    const double scale = static_cast<double>(n);
    const GaussianModel joint(problem.model.mu0 * scale, problem.model.mu1 * scale,
                              problem.model.sigma * std::sqrt(scale));
    return bayes_risk(problem.p0, problem.p0, problem.costs, joint);
}

double optimal_majority_risk(int n, const DetectionProblem& problem) {
    if (n < 1) {
        throw std::invalid_argument("optimal_majority_risk: n must be positive");
    }
    const ErrorPair local = error_probabilities(problem.p0, problem.costs, problem.model);
    const ErrorPair global =
        threshold_vote_errors(single_cluster(n, local), majority_threshold(n));
    return combine_risk(problem.p0, problem.costs, global);
}

double chair_varshney_gamma(int n, const DetectionProblem& problem) {
    if (n < 1) {
        throw std::invalid_argument("chair_varshney_gamma: n must be positive");
    }
    if (problem.p0 <= 0.0 || problem.p0 >= 1.0) {
        throw DegenerateFusionError("chair_varshney_gamma: p0 at an endpoint pins the decision");
    }
    // Work from log CDF values rather than the ErrorPair so the threshold
    // stays well-defined when the local operating point saturates (e.g.
    // error probabilities rounding to 0 or 1 at extreme noise levels).
    const double eta = lrt_threshold(problem.p0, problem.costs, problem.model);
    const double z0 = (eta - problem.model.mu0) / problem.model.sigma;
    const double z1 = (eta - problem.model.mu1) / problem.model.sigma;
    const double la = log_std_normal_cdf(z0);  // log(1 - pI)
    const double lb = log_std_normal_cdf(-z0); // log(pI)
    const double lc = log_std_normal_cdf(z1);  // log(pII)
    const double ld = log_std_normal_cdf(-z1); // log(1 - pII)
    return gamma_from_logs(n, problem.p0, problem.costs, la, lb, lc, ld);
}

double chair_varshney_gamma(int n, double p0, const CostPair& costs, const ErrorPair& local) {
    if (n < 1) {
        throw std::invalid_argument("chair_varshney_gamma: n must be positive");
    }
    if (p0 <= 0.0 || p0 >= 1.0) {
        throw DegenerateFusionError("chair_varshney_gamma: p0 at an endpoint pins the decision");
    }
    if (local.false_alarm <= 0.0 || local.false_alarm >= 1.0 || local.miss <= 0.0 ||
        local.miss >= 1.0) {
        throw DegenerateFusionError(
            "chair_varshney_gamma: local error probabilities must lie strictly in (0, 1)");
    }
    return gamma_from_logs(n, p0, costs, std::log1p(-local.false_alarm),
                           std::log(local.false_alarm), std::log(local.miss),
                           std::log1p(-local.miss));
}

double chair_varshney_risk(int n, const DetectionProblem& problem) {
    const double gamma = chair_varshney_gamma(n, problem);
    const int decide_h1_from = static_cast<int>(
        std::clamp(std::ceil(gamma), 0.0, static_cast<double>(n) + 1.0));
    const ErrorPair local = error_probabilities(problem.p0, problem.costs, problem.model);
    const ErrorPair global = threshold_vote_errors(single_cluster(n, local), decide_h1_from);
    return combine_risk(problem.p0, problem.costs, global);
}

RiskReport make_risk_report(const dynamics::ClusterSummary& clusters,
                            const DetectionProblem& problem) {
    int n = 0;
    for (int s : clusters.sizes) {
        n += s;
    }
    RiskReport report;
    report.aggregate_risk = aggregate_bayes_risk(clusters, problem);
    report.centralized_risk = centralized_bayes_risk(n, problem);
    report.optimal_majority_risk = optimal_majority_risk(n, problem);
    try {
        report.chair_varshney_risk = chair_varshney_risk(n, problem);
    } catch (const DegenerateFusionError&) {
        report.chair_varshney_risk = std::nullopt;
    }
    report.aggregate_bre = report.aggregate_risk - report.centralized_risk;
    return report;
}

} // namespace credence::fusion
