#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqchirp/model.hpp"
#include "eqchirp/optimize.hpp"

namespace eqchirp {

enum class Method { kLse, kCombined, kPlugin };

std::string_view method_name(Method method);
Method method_from_name(std::string_view name);

struct EstimatorOptions {
  NelderMeadOptions nelder_mead;
  ParameterBounds bounds;
};

struct ComponentEstimate {
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  // LSE: the joint chirp-rate estimate; combined: this component's own
  // chirp-rate estimate (before fusion); plugin: the shared first-component
  // estimate.
  double beta = 0.0;
  // Objective value of the optimization that produced this component.
  double rss = 0.0;
};

struct Diagnostics {
  std::vector<int> iterations;   // one entry per optimizer call
  std::vector<bool> converged;   // matching flags
  int calls_nd = 0;              // (p+1)-dimensional minimizations
  int calls_2d = 0;
  int calls_1d = 0;
  double total_objective = 0.0;  // full-model residual sum of squares
  std::vector<double> fusion_weights;  // combined method only
  bool ordering_violation = false;     // estimated powers not decreasing

  bool all_converged() const;
};

struct EstimationResult {
  ChirpParams params_hat;
  // Estimation order (the order the initial values were supplied in), which
  // the simulation harness keeps aligned with the true component order.
  std::vector<ComponentEstimate> per_component;
  Method method;
  Diagnostics diagnostics;
};

// Full least squares: minimizes the (p+1)-dimensional reduced objective from
// `init`, then recovers amplitudes at the minimizer. params_hat components
// are sorted descending by estimated power.
EstimationResult estimate_lse(const Signal& signal, int p,
                              const NonlinearParams& init,
                              const EstimatorOptions& opts = {});

// Sequential fit of one component at a time in (alpha_k, beta_k), each fit
// subtracted from the running residual, followed by the power-weighted fusion
// of the per-component chirp-rate estimates. params_hat carries the fused
// chirp rate; per_component keeps each component's own.
EstimationResult estimate_sequential_combined(
    const Signal& signal, int p,
    const std::vector<std::array<double, 2>>& inits,
    const EstimatorOptions& opts = {});

// First component as in the combined procedure; the resulting chirp rate is
// then frozen and every remaining component needs only a 1-D frequency
// search. Exactly one 2-D and p-1 1-D optimizations.
EstimationResult estimate_sequential_plugin(const Signal& signal, int p,
                                            std::array<double, 2> first_init,
                                            std::span<const double> alpha_inits,
                                            const EstimatorOptions& opts = {});

struct FusedBeta {
  double beta = 0.0;
  std::vector<double> weights;
};

// Convex combination of per-component chirp-rate estimates with weights
// proportional to estimated component power.
FusedBeta fuse_chirp_rates(std::span<const double> betas,
                           std::span<const double> powers);

nlohmann::json to_json(const EstimationResult& result);

}  // namespace eqchirp
