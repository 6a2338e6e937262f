// Command-line front end: single dynamics runs, experiment sweeps, baseline
// risk curves, and divergence tables, all emitted as plain CSV/plot data.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "credence/detection.hpp"
#include "credence/dynamics.hpp"
#include "credence/experiments.hpp"
#include "credence/fusion.hpp"
#include "credence/io.hpp"

namespace {

using credence::CostPair;
using credence::DetectionProblem;
using credence::GaussianModel;
namespace dyn = credence::dynamics;
namespace xp = credence::experiments;
namespace fus = credence::fusion;
namespace io = credence::io;

struct SigmaGridFlags {
    std::vector<double> sigmas;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    int sigma_count = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--sigmas", sigmas, "Explicit comma-separated noise grid")
            ->delimiter(',');
        cmd->add_option("--sigma-min", sigma_min, "Smallest noise level of a log-spaced grid");
        cmd->add_option("--sigma-max", sigma_max, "Largest noise level of a log-spaced grid");
        cmd->add_option("--sigma-count", sigma_count, "Number of log-spaced grid points");
    }

    std::vector<double> resolve() const {
        const bool have_range = sigma_min > 0.0 || sigma_max > 0.0 || sigma_count > 0;
        if (!sigmas.empty() && have_range) {
            throw std::invalid_argument("give either --sigmas or --sigma-min/--sigma-max/--sigma-count");
        }
        if (!sigmas.empty()) {
            return sigmas;
        }
        if (have_range) {
            return io::log_spaced_grid(sigma_min, sigma_max, sigma_count);
        }
        throw std::invalid_argument("missing noise grid (--sigmas or --sigma-min/--sigma-max/--sigma-count)");
    }
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    return out;
}

void print_report(std::ostream& out, const fus::RiskReport& report) {
    out << "risk report (true prior applied)\n";
    out << "  aggregate majority-vote risk : " << io::format_double(report.aggregate_risk) << '\n';
    out << "  centralized optimal risk     : " << io::format_double(report.centralized_risk) << '\n';
    out << "  optimal majority-vote risk   : " << io::format_double(report.optimal_majority_risk)
        << '\n';
    out << "  chair-varshney risk          : "
        << (report.chair_varshney_risk ? io::format_double(*report.chair_varshney_risk)
                                       : std::string("degenerate"))
        << '\n';
    out << "  aggregate bayes risk error   : " << io::format_double(report.aggregate_bre) << '\n';
}

struct SimulateArgs {
    int n = 101;
    double theta = 0.1;
    double sigma = 4.0;
    double p0 = 0.5;
    double c10 = 1.0;
    double c01 = 1.0;
    std::string measure = "bre";
    std::string dist = "uniform";
    double alpha = 1.0;
    double beta = 1.0;
    std::uint64_t seed = 0;
    int max_steps = 10000;
    std::string out_path = "trajectory.csv";
    std::string report_path;
};

int run_simulate(const SimulateArgs& args) {
    const GaussianModel model(0.0, 1.0, args.sigma);
    const CostPair costs(args.c10, args.c01);

    dyn::DynamicsConfig config;
    config.theta = args.theta;
    config.max_steps = args.max_steps;
    if (args.measure == "bre") {
        config.measure = dyn::ProximityMeasure::bayes_risk_error(costs, model);
    } else if (args.measure == "abs") {
        config.measure = dyn::ProximityMeasure::absolute_error();
    } else {
        throw std::invalid_argument("--measure must be 'bre' or 'abs'");
    }

    xp::InitialDistribution distribution;
    if (args.dist == "uniform") {
        distribution = xp::InitialDistribution::uniform01();
    } else if (args.dist == "beta") {
        distribution = xp::InitialDistribution::beta_distribution(args.alpha, args.beta);
    } else {
        throw std::invalid_argument("--dist must be 'uniform' or 'beta'");
    }

    const dyn::Population initial = xp::sample_initial_weights(distribution, args.n, args.seed);
    const dyn::Trajectory trajectory = dyn::run_dynamics(initial, config);
    const dyn::ClusterSummary clusters =
        dyn::detect_clusters(trajectory.final_state(), config.cluster_tol);

    {
        std::ofstream out = open_output(args.out_path);
        io::write_trajectory_csv(out, trajectory);
    }

    const DetectionProblem problem(args.p0, costs, model);
    const fus::RiskReport report = fus::make_risk_report(clusters, problem);

    std::cout << "converged: " << (trajectory.converged ? "yes" : "no") << " after "
              << trajectory.steps_to_convergence << " state-changing steps\n";
    std::cout << "clusters: " << clusters.count() << '\n';
    for (int k = 0; k < clusters.count(); ++k) {
        std::cout << "  weight " << io::format_double(clusters.weights[static_cast<std::size_t>(k)])
                  << "  size " << clusters.sizes[static_cast<std::size_t>(k)] << '\n';
    }
    print_report(std::cout, report);
    std::cout << "trajectory written to " << args.out_path << '\n';

    if (!args.report_path.empty()) {
        std::ofstream out = open_output(args.report_path);
        io::write_risk_report_csv(out, {{args.sigma, report}});
        std::cout << "risk report written to " << args.report_path << '\n';
    }
    return 0;
}

struct SweepArgs {
    std::string plan_path;
    int n = 101;
    double theta = 0.1;
    std::string dist = "uniform";
    double alpha = 1.0;
    double beta = 1.0;
    double p0 = 0.5;
    double c10 = 1.0;
    double c01 = 1.0;
    SigmaGridFlags grid;
    int trials = 200;
    std::uint64_t seed = 0;
    std::string out_prefix = "sweep";
    unsigned jobs = 0;
};

xp::ExperimentPlan plan_from_args(const SweepArgs& args) {
    if (!args.plan_path.empty()) {
        std::ifstream in(args.plan_path);
        if (!in) {
            throw std::invalid_argument("cannot open plan file '" + args.plan_path + "'");
        }
        return io::parse_plan(in);
    }
    xp::ExperimentPlan plan;
    plan.n = args.n;
    plan.theta = args.theta;
    if (args.dist == "uniform") {
        plan.distribution = xp::InitialDistribution::uniform01();
    } else if (args.dist == "beta") {
        plan.distribution = xp::InitialDistribution::beta_distribution(args.alpha, args.beta);
    } else {
        throw std::invalid_argument("--dist must be 'uniform' or 'beta'");
    }
    plan.true_p0 = args.p0;
    plan.costs = CostPair(args.c10, args.c01);
    plan.sigma_grid = args.grid.resolve();
    plan.trials = args.trials;
    plan.base_seed = args.seed;
    plan.validate();
    return plan;
}

int run_sweep_command(const SweepArgs& args) {
    const xp::ExperimentPlan plan = plan_from_args(args);
    for (const std::string& warning : plan.warnings()) {
        std::cerr << "warning: " << warning << '\n';
    }

    unsigned jobs = args.jobs;
    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    const xp::SweepResult result = xp::run_sweep(plan, jobs);

    {
        std::ofstream out = open_output(args.out_prefix + ".csv");
        io::write_sweep_csv(out, result);
    }

    std::vector<double> sigma;
    for (const xp::SweepRecord& rec : result.records) {
        sigma.push_back(rec.sigma);
    }
    const auto emit = [&](const std::string& name, auto mean_of, auto std_of) {
        std::vector<double> mean;
        std::vector<double> std_dev;
        for (const xp::SweepRecord& rec : result.records) {
            mean.push_back(mean_of(rec));
            std_dev.push_back(std_of(rec));
        }
        std::ofstream out = open_output(args.out_prefix + "_" + name + ".dat");
        io::write_plot_data(out, sigma, mean, std_dev);
    };
    emit("clusters", [](const xp::SweepRecord& r) { return r.mean_clusters; },
         [](const xp::SweepRecord& r) { return r.std_clusters; });
    emit("steps", [](const xp::SweepRecord& r) { return r.mean_steps; },
         [](const xp::SweepRecord& r) { return r.std_steps; });
    emit("aggregate_risk", [](const xp::SweepRecord& r) { return r.mean_aggregate_risk; },
         [](const xp::SweepRecord& r) { return r.std_aggregate_risk; });
    emit("aggregate_bre", [](const xp::SweepRecord& r) { return r.mean_aggregate_bre; },
         [](const xp::SweepRecord& r) { return r.std_aggregate_bre; });

    std::cout << "sweep written to " << args.out_prefix << ".csv (+ 4 plot-data files)\n";
    return 0;
}

struct RiskArgs {
    int n = 101;
    double p0 = 0.5;
    double c10 = 1.0;
    double c01 = 1.0;
    SigmaGridFlags grid;
    std::string out_path;
};

int run_risk(const RiskArgs& args) {
    const std::vector<double> sigmas = args.grid.resolve();
    const CostPair costs(args.c10, args.c01);

    std::ostringstream csv;
    csv << "sigma,centralized_risk,optimal_majority_risk,chair_varshney_risk\n";
    for (double sigma : sigmas) {
        const DetectionProblem problem(args.p0, costs, GaussianModel(0.0, 1.0, sigma));
        csv << io::format_double(sigma) << ','
            << io::format_double(fus::centralized_bayes_risk(args.n, problem)) << ','
            << io::format_double(fus::optimal_majority_risk(args.n, problem)) << ',';
        try {
            csv << io::format_double(fus::chair_varshney_risk(args.n, problem));
        } catch (const credence::DegenerateFusionError& e) {
            std::cerr << "warning: sigma = " << io::format_double(sigma) << ": " << e.what()
                      << '\n';
        }
        csv << '\n';
    }

    if (args.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out = open_output(args.out_path);
        out << csv.str();
        std::cout << "risk curves written to " << args.out_path << '\n';
    }
    return 0;
}

struct DivergeArgs {
    double sigma = 4.0;
    double c10 = 1.0;
    double c01 = 1.0;
    int points = 101;
    std::string out_path;
};

int run_diverge(const DivergeArgs& args) {
    if (args.points < 2) {
        throw std::invalid_argument("--points must be at least 2");
    }
    const GaussianModel model(0.0, 1.0, args.sigma);
    const CostPair costs(args.c10, args.c01);

    std::ostringstream csv;
    csv << "p,a,divergence\n";
    const double span = static_cast<double>(args.points - 1);
    for (int i = 0; i < args.points; ++i) {
        const double p = static_cast<double>(i) / span;
        for (int j = 0; j < args.points; ++j) {
            const double a = static_cast<double>(j) / span;
            csv << io::format_double(p) << ',' << io::format_double(a) << ','
                << io::format_double(credence::bre_divergence(p, a, costs, model)) << '\n';
        }
    }

    if (args.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out = open_output(args.out_path);
        out << csv.str();
        std::cout << "divergence table written to " << args.out_path << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded-confidence opinion dynamics among Bayesian detectors"};
    app.require_subcommand(1);

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "Run one trajectory and report clusters and risks");
    simulate->add_option("--n", sim.n, "Number of agents");
    simulate->add_option("--theta", sim.theta, "Confidence threshold");
    simulate->add_option("--sigma", sim.sigma, "Observation noise standard deviation");
    simulate->add_option("--p0", sim.p0, "True prior of h0");
    simulate->add_option("--c10", sim.c10, "Cost of a false alarm");
    simulate->add_option("--c01", sim.c01, "Cost of a miss");
    simulate->add_option("--measure", sim.measure, "Proximity measure: bre or abs");
    simulate->add_option("--dist", sim.dist, "Initial distribution: uniform or beta");
    simulate->add_option("--alpha", sim.alpha, "Beta shape alpha");
    simulate->add_option("--beta", sim.beta, "Beta shape beta");
    simulate->add_option("--seed", sim.seed, "Sampling seed");
    simulate->add_option("--max-steps", sim.max_steps, "Iteration cap");
    simulate->add_option("--out", sim.out_path, "Trajectory CSV path");
    simulate->add_option("--report", sim.report_path, "Optional risk-report CSV path");

    SweepArgs swp;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a full noise sweep with repeated trials");
    sweep->add_option("--plan", swp.plan_path, "Plan file (overrides inline flags)");
    sweep->add_option("--n", swp.n, "Number of agents");
    sweep->add_option("--theta", swp.theta, "Confidence threshold");
    sweep->add_option("--dist", swp.dist, "Initial distribution: uniform or beta");
    sweep->add_option("--alpha", swp.alpha, "Beta shape alpha");
    sweep->add_option("--beta", swp.beta, "Beta shape beta");
    sweep->add_option("--p0", swp.p0, "True prior of h0");
    sweep->add_option("--c10", swp.c10, "Cost of a false alarm");
    sweep->add_option("--c01", swp.c01, "Cost of a miss");
    swp.grid.attach(sweep);
    sweep->add_option("--trials", swp.trials, "Trials per grid point");
    sweep->add_option("--seed", swp.seed, "Base seed");
    sweep->add_option("--out-prefix", swp.out_prefix, "Output path prefix");
    sweep->add_option("--jobs", swp.jobs, "Worker threads (default: hardware concurrency)");

    RiskArgs rsk;
    CLI::App* risk = app.add_subcommand("risk", "Baseline risk curves without running dynamics");
    risk->add_option("--n", rsk.n, "Number of agents");
    risk->add_option("--p0", rsk.p0, "True prior of h0");
    risk->add_option("--c10", rsk.c10, "Cost of a false alarm");
    risk->add_option("--c01", rsk.c01, "Cost of a miss");
    rsk.grid.attach(risk);
    risk->add_option("--out", rsk.out_path, "Output CSV path (default: stdout)");

    DivergeArgs div;
    CLI::App* diverge = app.add_subcommand("diverge", "Tabulate the Bayes risk error divergence on a grid");
    diverge->add_option("--sigma", div.sigma, "Observation noise standard deviation");
    diverge->add_option("--c10", div.c10, "Cost of a false alarm");
    diverge->add_option("--c01", div.c01, "Cost of a miss");
    diverge->add_option("--points", div.points, "Grid points per axis");
    diverge->add_option("--out", div.out_path, "Output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(sim);
        }
        if (sweep->parsed()) {
            return run_sweep_command(swp);
        }
        if (risk->parsed()) {
            return run_risk(rsk);
        }
        return run_diverge(div);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
