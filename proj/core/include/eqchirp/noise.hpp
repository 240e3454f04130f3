#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace eqchirp {

// White Gaussian noise, X(n) = eps(n) with eps ~ N(0, sigma^2).
struct IidGaussian {
  double sigma = 1.0;
};

// X(n) = phi*X(n-1) + eps(n) + theta*eps(n-1), |phi| < 1 for stationarity.
struct Arma11 {
  double phi = 0.6;
  double theta = 0.1;
  double sigma = 1.0;
};

// Finite moving-average filter X(n) = sum_i coefficients[i] * eps(n - (origin + i)).
// origin = 0 gives a causal filter; a centered two-sided filter of half-width J
// uses origin = -J.
struct LinearProcess {
  std::vector<double> coefficients;
  int origin = 0;
  double sigma = 1.0;
};

using NoiseModel = std::variant<IidGaussian, Arma11, LinearProcess>;

// Throws ParameterDomainError on invalid fields (sigma <= 0 except for the
// LinearProcess zero-noise override, |phi| >= 1, empty coefficient list).
void validate(const NoiseModel& model);

// Deterministic given (model, n_samples, seed). The ARMA recursion burns in
// 500 warm-up samples before emitting. A single-tap LinearProcess {1} draws
// the identical stream as IidGaussian under the same seed and sigma.
std::vector<double> generate(const NoiseModel& model, int n_samples,
                             std::uint64_t seed);

// Long-run constant c: sum of squared moving-average coefficients of the
// process. 1 for white noise; (1 + 2*phi*theta + theta^2) / (1 - phi^2) for
// ARMA(1,1); sum a(j)^2 for an explicit filter.
double long_run_constant(const NoiseModel& model);

// Per-sample variance of the process, c * sigma^2.
double process_variance(const NoiseModel& model);

double innovation_sigma(const NoiseModel& model);

// Same filter shape with the innovation scale adjusted so the process
// standard deviation equals `process_sigma`.
NoiseModel with_process_sigma(const NoiseModel& model, double process_sigma);

// JSON shapes:
//   {"kind":"iid","sigma":..}
//   {"kind":"arma11","phi":..,"theta":..,"sigma":..}
//   {"kind":"linear","coefficients":[..],"sigma":..,"origin":..}
void to_json(nlohmann::json& j, const NoiseModel& model);
NoiseModel noise_model_from_json(const nlohmann::json& j);

}  // namespace eqchirp
