#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqchirp/estimators.hpp"
#include "eqchirp/model.hpp"
#include "eqchirp/noise.hpp"
#include "eqchirp/optimize.hpp"

namespace eqchirp {

struct OptimizerConfig {
  NelderMeadOptions nelder_mead;
  InitStrategy strategy = InitStrategy::kOracleNeighborhood;
  int grid_points = 21;
};

enum class SweepAxisKind { kSampleSize, kSnrDb };

struct SweepAxis {
  SweepAxisKind kind = SweepAxisKind::kSampleSize;
  std::vector<double> values;
  // Sample size held fixed while sweeping SNR.
  int n_samples_at_fixed = 500;
};

struct SweepConfig {
  SweepConfig(ChirpParams params, NoiseModel noise)
      : params(std::move(params)), noise(std::move(noise)) {}

  ChirpParams params;
  NoiseModel noise;
  SweepAxis axis;
  int replications = 500;
  std::vector<Method> methods = {Method::kLse, Method::kCombined,
                                 Method::kPlugin};
  OptimizerConfig optimizer;
  std::uint64_t master_seed = 1;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;  // throws ConfigError before any work starts
};

struct MseCell {
  double mse = 0.0;
  double bias = 0.0;
  double mse_converged_only = 0.0;
  long n_reps = 0;
  long n_nonconverged = 0;
};

struct MseRow {
  double axis_value = 0.0;
  Method method = Method::kLse;
  std::string parameter;  // alpha1..alphap, beta, a1, b1, ...
  MseCell cell;
  double mean_seconds = 0.0;  // per estimation at this grid point and method
};

struct MseReport {
  std::vector<MseRow> rows;
  SweepAxisKind axis_kind = SweepAxisKind::kSampleSize;
  std::uint64_t master_seed = 0;
  // Recorded so every report is self-describing.
  std::string snr_definition =
      "total signal power sum_k (A_k^2+B_k^2)/2 over per-sample noise "
      "variance, in dB";

  const MseRow* find(double axis_value, Method method,
                     const std::string& parameter) const;

  // Header: axis_value,method,parameter,mse,bias,n_reps,n_nonconverged,mean_seconds
  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;
};

// Runs the replication grid: per (axis value, replication) a fresh seeded
// noise stream, initial values from the configured neighborhood grids around
// the truth, then every selected estimator on the identical signal. The
// statistical outputs are bit-identical for a fixed config regardless of the
// thread count; timing fields are not.
MseReport run_sweep(const SweepConfig& config);

struct TimingRow {
  Method method = Method::kLse;
  double mean_seconds = 0.0;
  double ratio_vs_plugin = 0.0;
};

struct TimingReport {
  std::vector<TimingRow> rows;
  int n_samples = 0;
  int replications = 0;

  // Header: method,mean_seconds,ratio_vs_plugin
  void write_csv(std::ostream& out) const;
};

// Wall-clock comparison over replications with identical signals and initial
// values across methods. Requires all three methods selected; runs single
// threaded so the per-method means are comparable.
TimingReport run_timing(const SweepConfig& config);

// Deterministic per-replication seed, stable under appending axis values.
std::uint64_t replication_seed(std::uint64_t master_seed,
                               std::uint64_t axis_index,
                               std::uint64_t replication_index);

SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json sweep_config_to_json(const SweepConfig& config);

}  // namespace eqchirp
