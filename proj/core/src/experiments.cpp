#include "credence/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "credence/random.hpp"

namespace credence::experiments {

InitialDistribution InitialDistribution::uniform01() {
    return InitialDistribution{};
}

InitialDistribution InitialDistribution::beta_distribution(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("InitialDistribution: Beta parameters must be positive");
    }
    InitialDistribution d;
    d.kind = Kind::Beta;
    d.alpha = alpha;
    d.beta = beta;
    return d;
}

double InitialDistribution::mean() const {
    return kind == Kind::Uniform01 ? 0.5 : alpha / (alpha + beta);
}

void ExperimentPlan::validate() const {
    if (n < 1) {
        throw std::invalid_argument("ExperimentPlan: n must be positive");
    }
    if (!(theta > 0.0)) {
        throw std::invalid_argument("ExperimentPlan: theta must be positive");
    }
    if (!(true_p0 >= 0.0) || !(true_p0 <= 1.0)) {
        throw std::invalid_argument("ExperimentPlan: p0 must lie in [0, 1]");
    }
    if (sigma_grid.empty()) {
        throw std::invalid_argument("ExperimentPlan: sigma_grid must be nonempty");
    }
    for (double s : sigma_grid) {
        if (!(s > 0.0)) {
            throw std::invalid_argument("ExperimentPlan: sigma must be positive");
        }
    }
    if (trials < 1) {
        throw std::invalid_argument("ExperimentPlan: trials must be positive");
    }
    if (distribution.kind == InitialDistribution::Kind::Beta &&
        (!(distribution.alpha > 0.0) || !(distribution.beta > 0.0))) {
        throw std::invalid_argument("ExperimentPlan: Beta parameters must be positive");
    }
}

std::vector<std::string> ExperimentPlan::warnings() const {
    std::vector<std::string> notes;
    if (std::fabs(true_p0 - distribution.mean()) > 1e-9) {
        notes.push_back("true_p0 = " + std::to_string(true_p0) +
                        " does not match the initial-distribution mean " +
                        std::to_string(distribution.mean()));
    }
    return notes;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t sigma_index, int trial_index) {
    std::uint64_t h = mix64(base_seed);
    h = mix64(h ^ (static_cast<std::uint64_t>(sigma_index) + 1));
    h = mix64(h ^ (static_cast<std::uint64_t>(trial_index) + 1));
    return h;
}

namespace {

double sample_beta(SeededRng& rng, double alpha, double beta) {
    if (beta == 1.0) {
        return std::pow(rng.uniform01(), 1.0 / alpha); // CDF is x^alpha
    }
    if (alpha == 1.0) {
        return 1.0 - std::pow(rng.uniform01(), 1.0 / beta);
    }
    // Johnk: u^(1/a), v^(1/b) conditioned on their sum staying within 1.
    for (;;) {
        const double u = std::pow(rng.uniform01(), 1.0 / alpha);
        const double v = std::pow(rng.uniform01(), 1.0 / beta);
        const double sum = u + v;
        if (sum > 0.0 && sum <= 1.0) {
            return u / sum;
        }
    }
}

} // namespace

dynamics::Population sample_initial_weights(const InitialDistribution& distribution, int n,
                                            std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("sample_initial_weights: n must be positive");
    }
    SeededRng rng(seed);
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (double& w : weights) {
        w = distribution.kind == InitialDistribution::Kind::Uniform01
                ? rng.uniform01()
                : sample_beta(rng, distribution.alpha, distribution.beta);
    }
    return dynamics::Population(std::move(weights));
}

TrialOutcome run_trial(const ExperimentPlan& plan, double sigma, int trial_index) {
    plan.validate();
    const auto it = std::find(plan.sigma_grid.begin(), plan.sigma_grid.end(), sigma);
    if (it == plan.sigma_grid.end()) {
        throw std::invalid_argument("run_trial: sigma is not a grid point of the plan");
    }
    const std::size_t sigma_index = static_cast<std::size_t>(it - plan.sigma_grid.begin());

    const GaussianModel model(0.0, 1.0, sigma);
    dynamics::DynamicsConfig config;
    config.theta = plan.theta;
    config.measure = dynamics::ProximityMeasure::bayes_risk_error(plan.costs, model);

    const dynamics::Population initial = sample_initial_weights(
        plan.distribution, plan.n, trial_seed(plan.base_seed, sigma_index, trial_index));
    const dynamics::Trajectory trajectory = dynamics::run_dynamics(initial, config);
    dynamics::ClusterSummary clusters =
        dynamics::detect_clusters(trajectory.final_state(), config.cluster_tol);

    const DetectionProblem problem(plan.true_p0, plan.costs, model);
    fusion::RiskReport report = fusion::make_risk_report(clusters, problem);
    return TrialOutcome{std::move(clusters), trajectory.steps_to_convergence, std::move(report)};
}

namespace {

struct MeanStd {
    double mean = 0.0;
    double std_dev = 0.0;
};

template <typename Get>
MeanStd stats_over(const std::vector<TrialRecord>& records, Get get) {
    const double count = static_cast<double>(records.size());
    double mean = 0.0;
    for (const TrialRecord& r : records) {
        mean += get(r);
    }
    mean /= count;
    double var = 0.0;
    for (const TrialRecord& r : records) {
        const double dev = get(r) - mean;
        var += dev * dev;
    }
    return {mean, std::sqrt(var / count)};
}

} // namespace

SweepResult run_sweep(const ExperimentPlan& plan, unsigned jobs) {
    plan.validate();
    const std::size_t grid_size = plan.sigma_grid.size();
    const std::size_t trials = static_cast<std::size_t>(plan.trials);
    const std::size_t total = grid_size * trials;

    std::vector<std::vector<TrialRecord>> trial_records(grid_size,
                                                        std::vector<TrialRecord>(trials));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const std::size_t flat = next.fetch_add(1);
            if (flat >= total || failed.load(std::memory_order_relaxed)) {
                return;
            }
            const std::size_t s = flat / trials;
            const int t = static_cast<int>(flat % trials);
            try {
                const TrialOutcome outcome = run_trial(plan, plan.sigma_grid[s], t);
                trial_records[s][static_cast<std::size_t>(t)] =
                    TrialRecord{outcome.clusters.count(), outcome.steps,
                                outcome.report.aggregate_risk, outcome.report.aggregate_bre};
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    try {
                        std::throw_with_nested(std::runtime_error(
                            "run_sweep: trial " + std::to_string(t) + " at sigma = " +
                            std::to_string(plan.sigma_grid[s]) + " failed"));
                    } catch (...) {
                        first_error = std::current_exception();
                    }
                }
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    const unsigned thread_count = std::max(1u, jobs);
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned i = 0; i < thread_count; ++i) {
            pool.emplace_back(worker);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }

    // Fixed-order reduction: identical output for any job count.
    SweepResult result;
    result.records.reserve(grid_size);
    for (std::size_t s = 0; s < grid_size; ++s) {
        const std::vector<TrialRecord>& records = trial_records[s];
        SweepRecord rec;
        rec.sigma = plan.sigma_grid[s];
        const MeanStd clusters =
            stats_over(records, [](const TrialRecord& r) { return static_cast<double>(r.cluster_count); });
        const MeanStd steps =
            stats_over(records, [](const TrialRecord& r) { return static_cast<double>(r.steps); });
        const MeanStd risk = stats_over(records, [](const TrialRecord& r) { return r.aggregate_risk; });
        const MeanStd bre = stats_over(records, [](const TrialRecord& r) { return r.aggregate_bre; });
        rec.mean_clusters = clusters.mean;
        rec.std_clusters = clusters.std_dev;
        rec.mean_steps = steps.mean;
        rec.std_steps = steps.std_dev;
        rec.mean_aggregate_risk = risk.mean;
        rec.std_aggregate_risk = risk.std_dev;
        rec.mean_aggregate_bre = bre.mean;
        rec.std_aggregate_bre = bre.std_dev;

        const DetectionProblem problem(plan.true_p0, plan.costs,
                                       GaussianModel(0.0, 1.0, plan.sigma_grid[s]));
        rec.centralized_risk = fusion::centralized_bayes_risk(plan.n, problem);
        rec.optimal_majority_risk = fusion::optimal_majority_risk(plan.n, problem);
        try {
            rec.chair_varshney_risk = fusion::chair_varshney_risk(plan.n, problem);
        } catch (const DegenerateFusionError&) {
            rec.chair_varshney_risk = std::nullopt;
        }
        result.records.push_back(std::move(rec));
    }
    result.trials = std::move(trial_records);
    return result;
}

} // namespace credence::experiments
