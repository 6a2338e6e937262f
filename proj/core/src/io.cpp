#include "credence/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace credence::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto notspace = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
    while (!s.empty() && !notspace(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && !notspace(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= line.size(); ++k) {
        if (k == line.size() || line[k] == sep) {
            fields.push_back(line.substr(start, k - start));
            start = k + 1;
        }
    }
    return fields;
}

void expect_header(std::istream& in, std::string_view expected, const char* what) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != expected) {
        throw std::invalid_argument(std::string(what) + ": missing header '" +
                                    std::string(expected) + "'");
    }
}

} // namespace

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                      std::chars_format::general, 17);
    return std::string(buffer.data(), result.ptr);
}

double parse_double(std::string_view text) {
    text = trim(text);
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
        throw std::invalid_argument("expected a number, got '" + std::string(text) + "'");
    }
    return value;
}

std::string format_int(long long value) {
    return std::to_string(value);
}

long long parse_int(std::string_view text) {
    text = trim(text);
    long long value = 0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
        throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

void write_trajectory_csv(std::ostream& out, const dynamics::Trajectory& trajectory) {
    out << "step,agent_index,weight\n";
    for (std::size_t t = 0; t < trajectory.snapshots.size(); ++t) {
        const dynamics::Population& pop = trajectory.snapshots[t];
        for (std::size_t i = 0; i < pop.size(); ++i) {
            out << t << ',' << i << ',' << format_double(pop[i]) << '\n';
        }
    }
}

std::vector<dynamics::Population> read_trajectory_csv(std::istream& in) {
    expect_header(in, "step,agent_index,weight", "trajectory csv");
    std::vector<std::vector<double>> snapshots;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 3) {
            throw std::invalid_argument("trajectory csv: expected 3 fields, got '" + line + "'");
        }
        const auto step = static_cast<std::size_t>(parse_int(fields[0]));
        const auto agent = static_cast<std::size_t>(parse_int(fields[1]));
        if (step >= snapshots.size()) {
            snapshots.resize(step + 1);
        }
        if (agent != snapshots[step].size()) {
            throw std::invalid_argument("trajectory csv: out-of-order agent index in '" + line + "'");
        }
        snapshots[step].push_back(parse_double(fields[2]));
    }
    std::vector<dynamics::Population> result;
    result.reserve(snapshots.size());
    for (auto& weights : snapshots) {
        result.emplace_back(std::move(weights));
    }
    return result;
}

namespace {

constexpr std::string_view kRiskHeader =
    "sigma,aggregate_risk,centralized_risk,optimal_majority_risk,chair_varshney_risk,aggregate_bre";

} // namespace

void write_risk_report_csv(std::ostream& out,
                           const std::vector<std::pair<double, fusion::RiskReport>>& rows) {
    out << kRiskHeader << '\n';
    for (const auto& [sigma, report] : rows) {
        out << format_double(sigma) << ',' << format_double(report.aggregate_risk) << ','
            << format_double(report.centralized_risk) << ','
            << format_double(report.optimal_majority_risk) << ',';
        if (report.chair_varshney_risk) {
            out << format_double(*report.chair_varshney_risk);
        }
        out << ',' << format_double(report.aggregate_bre) << '\n';
    }
}

std::vector<std::pair<double, fusion::RiskReport>> read_risk_report_csv(std::istream& in) {
    expect_header(in, kRiskHeader, "risk report csv");
    std::vector<std::pair<double, fusion::RiskReport>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 6) {
            throw std::invalid_argument("risk report csv: expected 6 fields, got '" + line + "'");
        }
        fusion::RiskReport report;
        report.aggregate_risk = parse_double(fields[1]);
        report.centralized_risk = parse_double(fields[2]);
        report.optimal_majority_risk = parse_double(fields[3]);
        if (!trim(fields[4]).empty()) {
            report.chair_varshney_risk = parse_double(fields[4]);
        }
        report.aggregate_bre = parse_double(fields[5]);
        rows.emplace_back(parse_double(fields[0]), report);
    }
    return rows;
}

namespace {

constexpr std::string_view kSweepHeader =
    "sigma,mean_clusters,std_clusters,mean_steps,std_steps,mean_aggregate_risk,"
    "std_aggregate_risk,centralized_risk,optimal_majority_risk,chair_varshney_risk,"
    "mean_aggregate_bre";

} // namespace

void write_sweep_csv(std::ostream& out, const experiments::SweepResult& result) {
    out << kSweepHeader << '\n';
    for (const experiments::SweepRecord& rec : result.records) {
        out << format_double(rec.sigma) << ',' << format_double(rec.mean_clusters) << ','
            << format_double(rec.std_clusters) << ',' << format_double(rec.mean_steps) << ','
            << format_double(rec.std_steps) << ',' << format_double(rec.mean_aggregate_risk)
            << ',' << format_double(rec.std_aggregate_risk) << ','
            << format_double(rec.centralized_risk) << ','
            << format_double(rec.optimal_majority_risk) << ',';
        if (rec.chair_varshney_risk) {
            out << format_double(*rec.chair_varshney_risk);
        }
        out << ',' << format_double(rec.mean_aggregate_bre) << '\n';
    }
}

std::vector<experiments::SweepRecord> read_sweep_csv(std::istream& in) {
    expect_header(in, kSweepHeader, "sweep csv");
    std::vector<experiments::SweepRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 11) {
            throw std::invalid_argument("sweep csv: expected 11 fields, got '" + line + "'");
        }
        experiments::SweepRecord rec;
        rec.sigma = parse_double(fields[0]);
        rec.mean_clusters = parse_double(fields[1]);
        rec.std_clusters = parse_double(fields[2]);
        rec.mean_steps = parse_double(fields[3]);
        rec.std_steps = parse_double(fields[4]);
        rec.mean_aggregate_risk = parse_double(fields[5]);
        rec.std_aggregate_risk = parse_double(fields[6]);
        rec.centralized_risk = parse_double(fields[7]);
        rec.optimal_majority_risk = parse_double(fields[8]);
        if (!trim(fields[9]).empty()) {
            rec.chair_varshney_risk = parse_double(fields[9]);
        }
        rec.mean_aggregate_bre = parse_double(fields[10]);
        records.push_back(rec);
    }
    return records;
}

void write_plot_data(std::ostream& out, const std::vector<double>& sigma,
                     const std::vector<double>& mean, const std::vector<double>& std_dev) {
    if (sigma.size() != mean.size() || sigma.size() != std_dev.size()) {
        throw std::invalid_argument("write_plot_data: column sizes differ");
    }
    out << "# sigma mean std\n";
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        out << format_double(sigma[k]) << ' ' << format_double(mean[k]) << ' '
            << format_double(std_dev[k]) << '\n';
    }
}

std::vector<double> log_spaced_grid(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi >= lo) || count < 1) {
        throw std::invalid_argument("log_spaced_grid: need 0 < lo <= hi and count >= 1");
    }
    if (count == 1) {
        return {lo};
    }
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    for (int k = 0; k < count; ++k) {
        grid[static_cast<std::size_t>(k)] =
            std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(k) /
                                  static_cast<double>(count - 1));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

experiments::ExperimentPlan parse_plan(std::istream& in) {
    experiments::ExperimentPlan plan;
    plan.sigma_grid.clear();

    bool have_theta = false;
    bool have_grid = false;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    int sigma_count = 0;
    bool have_min = false, have_max = false, have_count = false;
    std::string dist_name = "uniform";
    double alpha = 1.0, beta = 1.0;
    bool have_alpha = false, have_beta = false;

    std::string line;
    while (std::getline(in, line)) {
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("plan: expected 'key = value', got '" + std::string(view) + "'");
        }
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view value = trim(view.substr(eq + 1));

        try {
            if (key == "n") {
                plan.n = static_cast<int>(parse_int(value));
            } else if (key == "theta") {
                plan.theta = parse_double(value);
                have_theta = true;
            } else if (key == "distribution") {
                dist_name = std::string(value);
            } else if (key == "alpha") {
                alpha = parse_double(value);
                have_alpha = true;
            } else if (key == "beta") {
                beta = parse_double(value);
                have_beta = true;
            } else if (key == "p0") {
                plan.true_p0 = parse_double(value);
            } else if (key == "c10") {
                plan.costs.c10 = parse_double(value);
            } else if (key == "c01") {
                plan.costs.c01 = parse_double(value);
            } else if (key == "trials") {
                plan.trials = static_cast<int>(parse_int(value));
            } else if (key == "seed") {
                std::uint64_t seed = 0;
                const auto text = trim(value);
                const auto result = std::from_chars(text.data(), text.data() + text.size(), seed);
                if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
                    throw std::invalid_argument("expected an unsigned integer, got '" +
                                                std::string(text) + "'");
                }
                plan.base_seed = seed;
            } else if (key == "sigma_grid") {
                for (const auto field : split(value, ',')) {
                    plan.sigma_grid.push_back(parse_double(field));
                }
                have_grid = true;
            } else if (key == "sigma_min") {
                sigma_min = parse_double(value);
                have_min = true;
            } else if (key == "sigma_max") {
                sigma_max = parse_double(value);
                have_max = true;
            } else if (key == "sigma_count") {
                sigma_count = static_cast<int>(parse_int(value));
                have_count = true;
            } else {
                throw std::invalid_argument("plan: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            if (std::string(e.what()).rfind("plan:", 0) == 0) {
                throw;
            }
            throw std::invalid_argument("plan: bad value for key '" + key + "': " + e.what());
        }
    }

    if (!have_theta) {
        throw std::invalid_argument("plan: missing key 'theta'");
    }
    if (have_grid && (have_min || have_max || have_count)) {
        throw std::invalid_argument("plan: give either 'sigma_grid' or 'sigma_min/sigma_max/sigma_count'");
    }
    if (!have_grid) {
        if (!(have_min && have_max && have_count)) {
            throw std::invalid_argument(
                "plan: missing sigma grid ('sigma_grid' or 'sigma_min/sigma_max/sigma_count')");
        }
        plan.sigma_grid = log_spaced_grid(sigma_min, sigma_max, sigma_count);
    }

    if (dist_name == "uniform") {
        if (have_alpha || have_beta) {
            throw std::invalid_argument("plan: 'alpha'/'beta' only apply to distribution = beta");
        }
        plan.distribution = experiments::InitialDistribution::uniform01();
    } else if (dist_name == "beta") {
        plan.distribution = experiments::InitialDistribution::beta_distribution(alpha, beta);
    } else {
        throw std::invalid_argument("plan: unknown distribution '" + dist_name + "'");
    }

    plan.validate();
    return plan;
}

void write_plan(std::ostream& out, const experiments::ExperimentPlan& plan) {
    out << "n = " << plan.n << '\n';
    out << "theta = " << format_double(plan.theta) << '\n';
    if (plan.distribution.kind == experiments::InitialDistribution::Kind::Uniform01) {
        out << "distribution = uniform\n";
    } else {
        out << "distribution = beta\n";
        out << "alpha = " << format_double(plan.distribution.alpha) << '\n';
        out << "beta = " << format_double(plan.distribution.beta) << '\n';
    }
    out << "p0 = " << format_double(plan.true_p0) << '\n';
    out << "c10 = " << format_double(plan.costs.c10) << '\n';
    out << "c01 = " << format_double(plan.costs.c01) << '\n';
    out << "sigma_grid = ";
    for (std::size_t k = 0; k < plan.sigma_grid.size(); ++k) {
        out << (k ? "," : "") << format_double(plan.sigma_grid[k]);
    }
    out << '\n';
    out << "trials = " << plan.trials << '\n';
    out << "seed = " << plan.base_seed << '\n';
}

} // namespace credence::io
