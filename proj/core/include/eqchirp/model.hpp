#pragma once

#include <iosfwd>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace eqchirp {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains_open(double x) const { return x > lo && x < hi; }
  double width() const { return hi - lo; }
};

// Domain box for valid parameters: amplitudes in [-M, M], frequencies in
// (0, 2*pi), chirp rate in (0, pi/2). The open intervals keep estimates off
// the boundary.
struct ParameterBounds {
  double amplitude_bound = 100.0;
  Interval alpha_interval{0.0, kTwoPi};
  Interval beta_interval{0.0, std::numbers::pi / 2.0};
};

// One chirp component: a*cos(alpha*n + beta*n^2) + b*sin(alpha*n + beta*n^2),
// with the chirp rate beta shared across all components of a ChirpParams.
struct Component {
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;

  double power() const { return a * a + b * b; }
};

// Nonlinear parameter block (alpha_1..alpha_p, beta) that remains after the
// amplitudes have been solved out.
struct NonlinearParams {
  std::vector<double> alphas;
  double beta = 0.0;

  int count() const { return static_cast<int>(alphas.size()); }
};

// Full parameter vector of the equal-chirp-rate model. Components are kept
// in strictly decreasing power order A_k^2 + B_k^2; create() enforces that,
// unchecked() skips validation (used for estimator output, which may land
// anywhere).
class ChirpParams {
 public:
  // Sorts descending by component power, rejects power ties, and validates
  // every field against `bounds`. Sets the reordered() flag when the input
  // order had to change.
  static ChirpParams create(std::vector<Component> components, double beta,
                            const ParameterBounds& bounds = {});

  static ChirpParams unchecked(std::vector<Component> components, double beta);

  int count() const { return static_cast<int>(components_.size()); }
  const std::vector<Component>& components() const { return components_; }
  const Component& component(int k) const { return components_[k]; }
  double beta() const { return beta_; }
  bool reordered() const { return reordered_; }

  double component_power(int k) const { return components_[k].power(); }
  double total_power() const;

  NonlinearParams nonlinear() const;

 private:
  ChirpParams(std::vector<Component> components, double beta, bool reordered)
      : components_(std::move(components)), beta_(beta), reordered_(reordered) {}

  std::vector<Component> components_;
  double beta_ = 0.0;
  bool reordered_ = false;
};

// Real-valued time series y(1..N). Stored 0-based: y(n) = samples()[n - 1].
class Signal {
 public:
  explicit Signal(std::vector<double> samples);

  int size() const { return static_cast<int>(samples_.size()); }
  const std::vector<double>& samples() const { return samples_; }

 private:
  std::vector<double> samples_;
};

// Phase alpha*n + beta*n^2 reduced modulo 2*pi before trig evaluation, so
// large n does not degrade cos/sin accuracy.
double chirp_phase(double alpha, double beta, long n);

// y(n) = sum_k [A_k cos(alpha_k n + beta n^2) + B_k sin(alpha_k n + beta n^2)]
// (+ noise(n) when given), n = 1..N.
Signal synthesize(const ChirpParams& params, int n_samples);
Signal synthesize(const ChirpParams& params, int n_samples,
                  std::span<const double> noise);

// N x 2p regression design: column 2k-1 holds cos(alpha_k n + beta n^2),
// column 2k holds sin(alpha_k n + beta n^2) (1-based column labels).
Eigen::MatrixXd design_matrix(const NonlinearParams& xi, int n_samples);

struct PowerSnr {
  double power = 0.0;
  double snr_db = 0.0;
};

// Signal power sum_k (A_k^2 + B_k^2)/2 and SNR defined as total signal power
// over per-sample noise variance sigma^2, in dB.
PowerSnr signal_power_and_snr(const ChirpParams& params, double sigma);

// Per-sample noise standard deviation that yields the requested SNR.
double sigma_for_snr(const ChirpParams& params, double snr_db);

// JSON document shape: {"components":[{"a":..,"b":..,"alpha":..}],"beta":..}
void to_json(nlohmann::json& j, const Component& c);
void from_json(const nlohmann::json& j, Component& c);
void to_json(nlohmann::json& j, const ChirpParams& p);
ChirpParams chirp_params_from_json(const nlohmann::json& j,
                                   bool validate = true,
                                   const ParameterBounds& bounds = {});

// CSV with header "n,y", one row per sample.
void write_signal_csv(const Signal& signal, std::ostream& out);
// Throws ConfigError naming the 1-based line number of a malformed row.
Signal read_signal_csv(std::istream& in);

}  // namespace eqchirp
