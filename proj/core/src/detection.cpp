#include "credence/detection.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace credence {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

} // namespace

GaussianModel::GaussianModel(double mu0_, double mu1_, double sigma_)
    : mu0(mu0_), mu1(mu1_), sigma(sigma_) {
    require_finite(mu0, "GaussianModel: mu0");
    require_finite(mu1, "GaussianModel: mu1");
    if (!std::isfinite(sigma) || !(sigma > 0.0)) {
        throw std::invalid_argument("GaussianModel: sigma must be positive");
    }
    if (!(mu1 > mu0)) {
        throw std::invalid_argument("GaussianModel: mu1 must exceed mu0");
    }
}

CostPair::CostPair(double c10_, double c01_) : c10(c10_), c01(c01_) {
    if (!std::isfinite(c10) || !(c10 > 0.0) || !std::isfinite(c01) || !(c01 > 0.0)) {
        throw std::invalid_argument("CostPair: costs must be positive");
    }
}

DetectionProblem::DetectionProblem(double p0_, const CostPair& costs_, const GaussianModel& model_)
    : p0(p0_), costs(costs_), model(model_) {
    if (!(p0 >= 0.0) || !(p0 <= 1.0)) {
        throw std::invalid_argument("DetectionProblem: p0 must lie in [0, 1]");
    }
}

double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

double log_std_normal_cdf(double x) {
    if (x > -36.0) {
        return std::log(std_normal_cdf(x));
    }
    // Deep lower tail: erfc underflows, so use the Mills-ratio expansion
    //   Phi(-z) = phi(z)/z * (1 - 1/z^2 + 3/z^4 - 15/z^6 + 105/z^8 - ...),
    // truncated where the next term is below 1e-12 relative for z >= 36.
    const double z = -x;
    const double w = 1.0 / (z * z);
    const double series = 1.0 + w * (-1.0 + w * (3.0 + w * (-15.0 + w * 105.0)));
    return -0.5 * z * z - std::log(z) - kLogSqrt2Pi + std::log(series);
}

double lrt_threshold(double weight, const CostPair& costs, const GaussianModel& model) {
    if (!(weight >= 0.0) || !(weight <= 1.0)) {
        throw std::invalid_argument("lrt_threshold: weight must lie in [0, 1]");
    }
    // Endpoint weights pin the decision; never evaluate log(0).
    if (weight == 0.0) {
        return -kInf;
    }
    if (weight == 1.0) {
        return kInf;
    }
    const double log_tau = std::log((weight * costs.c10) / ((1.0 - weight) * costs.c01));
    return model.sigma * model.sigma * log_tau / (model.mu1 - model.mu0) +
           0.5 * (model.mu0 + model.mu1);
}

ErrorPair error_probabilities(double weight, const CostPair& costs, const GaussianModel& model) {
    const double eta = lrt_threshold(weight, costs, model);
    if (eta == -kInf) {
        return {1.0, 0.0};
    }
    if (eta == kInf) {
        return {0.0, 1.0};
    }
    // Survival probabilities evaluated with negated arguments to avoid 1 - x
    // cancellation in the tails.
    return {std_normal_cdf((model.mu0 - eta) / model.sigma),
            std_normal_cdf((eta - model.mu1) / model.sigma)};
}

double bayes_risk(double p0, double weight, const CostPair& costs, const GaussianModel& model) {
    if (!(p0 >= 0.0) || !(p0 <= 1.0)) {
        throw std::invalid_argument("bayes_risk: p0 must lie in [0, 1]");
    }
    const ErrorPair e = error_probabilities(weight, costs, model);
    return costs.c10 * p0 * e.false_alarm + costs.c01 * (1.0 - p0) * e.miss;
}

double bre_divergence(double p, double weight, const CostPair& costs, const GaussianModel& model) {
    const double excess = bayes_risk(p, weight, costs, model) - bayes_risk(p, p, costs, model);
    if (excess < 0.0) {
        if (excess < -1e-12) {
            throw InternalConsistencyError(
                "bre_divergence: excess risk " + std::to_string(excess) +
                " below the floating-point noise floor");
        }
        return 0.0;
    }
    return excess;
}

} // namespace credence
