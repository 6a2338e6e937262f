#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "credence/dynamics.hpp"
#include "credence/experiments.hpp"
#include "credence/fusion.hpp"

namespace credence::io {

/// Decimal form with 17 significant digits; parses back to the same double.
/// Locale-independent.
std::string format_double(double value);

/// Locale-independent double parsing; throws std::invalid_argument on
/// anything but a full numeric token.
double parse_double(std::string_view text);

std::string format_int(long long value);
long long parse_int(std::string_view text);

// Trajectory CSV: header `step,agent_index,weight`, one row per agent per
// snapshot.
void write_trajectory_csv(std::ostream& out, const dynamics::Trajectory& trajectory);
std::vector<dynamics::Population> read_trajectory_csv(std::istream& in);

// Risk-report CSV: header
// `sigma,aggregate_risk,centralized_risk,optimal_majority_risk,chair_varshney_risk,aggregate_bre`;
// the Chair-Varshney cell is empty when the threshold is degenerate.
void write_risk_report_csv(std::ostream& out,
                           const std::vector<std::pair<double, fusion::RiskReport>>& rows);
std::vector<std::pair<double, fusion::RiskReport>> read_risk_report_csv(std::istream& in);

// Sweep CSV: one row per grid point with the aggregate statistics and the
// trial-independent baselines.
void write_sweep_csv(std::ostream& out, const experiments::SweepResult& result);
std::vector<experiments::SweepRecord> read_sweep_csv(std::istream& in);

// Plot data: `# sigma mean std` comment header then space-separated rows;
// digestible by gnuplot and friends.
void write_plot_data(std::ostream& out, const std::vector<double>& sigma,
                     const std::vector<double>& mean, const std::vector<double>& std_dev);

// Flat key=value plan files ('#' starts a comment). Keys: n, theta,
// distribution (uniform|beta), alpha, beta, p0, c10, c01, trials, seed, and
// either sigma_grid (comma list) or sigma_min/sigma_max/sigma_count
// (log-spaced). Unknown or malformed keys throw with the key named.
experiments::ExperimentPlan parse_plan(std::istream& in);
void write_plan(std::ostream& out, const experiments::ExperimentPlan& plan);

/// Log-spaced grid from lo to hi inclusive; count = 1 collapses to {lo}.
std::vector<double> log_spaced_grid(double lo, double hi, int count);

} // namespace credence::io
