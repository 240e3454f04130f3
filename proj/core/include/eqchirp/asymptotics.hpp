#pragma once

#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "eqchirp/model.hpp"

namespace eqchirp {

// Parameter ordering used by every covariance matrix here:
// (A_1, B_1, ..., A_p, B_p, alpha_1, ..., alpha_p, beta), dimension 3p+1.
//
// All closed forms below are variances of the scaled estimators
// N^{1/2}(amplitude), N^{3/2}(alpha), N^{5/2}(beta); divide by N^{2*power}
// for the unscaled variance at a given N.
struct ScalingMatrix {
  int n_samples = 0;
  int p = 0;

  int dimension() const { return 3 * p + 1; }
  // Exponent of N for the scaled estimator at this coordinate.
  double power(int theta_index) const;
  double factor(int theta_index) const;  // N^power
  double unscaled_variance(int theta_index, double scaled_variance) const;
};

// Inverse of the limiting covariance shape of the full least squares
// estimator, assembled blockwise: identity over the amplitudes, the
// amplitude/frequency coupling rows (B_k/2 .. B_k/3; -A_k/2 .. -A_k/3), and
// the frequency block with entries S_k/3, S_k/4 and sum_k S_k/5, where
// S_k = A_k^2 + B_k^2.
Eigen::MatrixXd sigma1_inverse(const ChirpParams& params);

struct LseAvar {
  std::vector<double> alpha_scaled_var;  // 360 c s2 / sum S + 24 c s2 / S_k
  double beta_scaled_var = 0.0;          // 360 c s2 / sum S
  std::vector<double> a_scaled_var;      // from the matrix route
  std::vector<double> b_scaled_var;
  Eigen::MatrixXd full_scaled_cov;       // 2 c s2 * inverse(sigma1_inverse)
};

// Closed forms plus the matrix route; throws std::logic_error if the two
// disagree beyond 1e-8 relative (they are algebraically identical).
LseAvar lse_avar(const ChirpParams& params, double c, double sigma2);

struct CombinedAvar {
  // Per component, order (A_k, B_k, alpha_k, beta_k).
  std::vector<Eigen::Matrix4d> component_cov;
  std::vector<double> alpha_scaled_var;  // 384 c s2 / S_k
  std::vector<double> beta_k_scaled_var; // 360 c s2 / S_k
  std::vector<double> weights;           // l_k = S_k / sum S
  double fused_beta_scaled_var = 0.0;    // equals the LSE chirp-rate variance
};

// Per-component covariance matrices, fusion weights, and the fused
// chirp-rate variance; verifies the fused variance equals 360 c s2 / sum S
// to 1e-12 relative.
CombinedAvar combined_avar(const ChirpParams& params, double c, double sigma2);

struct PluginAvar {
  std::vector<double> alpha_scaled_var;  // 24 c s2/S_k + 360 c s2/S_1 (k >= 2)
  double beta_scaled_var = 0.0;          // 360 c s2 / S_1
  std::vector<double> a_scaled_var;
  std::vector<double> b_scaled_var;
  Eigen::Matrix4d first_component_cov;   // (A_1, B_1, alpha_1, beta)
  // k >= 2, order (A_k, B_k, alpha_k): sandwich covariance built from the
  // derivative-vector moments.
  std::vector<Eigen::Matrix3d> sandwich_cov;
  // Cross covariance between the first component (rows: A_1, B_1, alpha_1,
  // beta) and component k (columns: A_k, B_k, alpha_k), k >= 2.
  std::vector<Eigen::Matrix<double, 4, 3>> first_cross_cov;
  // Cross covariance between components k and j for 2 <= k < j, in the same
  // 3x3 layout; assembled from the reported derivative cross-moments, which
  // carry no leading 1/S_1 factor. Kept verbatim; not validated against
  // simulation.
  std::vector<std::vector<Eigen::Matrix3d>> cross_cov;
};

// Closed forms for the plugin estimator plus the sandwich route
// Sbar_k^{-1} * Sigma3_k * Sbar_k^{-1}; throws std::logic_error if the
// sandwich diagonal disagrees with the closed forms beyond 1e-8 relative.
PluginAvar plugin_avar(const ChirpParams& params, double c, double sigma2);

// Closed-form inverse of Sbar_k = [[1,0,B/2],[0,1,-A/2],[B/2,-A/2,S/3]]:
// (1/S) * [[A^2+4B^2, -3AB, -6B], [-3AB, 4A^2+B^2, 6A], [-6B, 6A, 12]].
Eigen::Matrix3d sbar_matrix(double a, double b);
Eigen::Matrix3d sbar_inverse_closed_form(double a, double b);

struct ComparisonRow {
  int k = 0;  // component index, 1-based, k >= 2
  // Var(alpha_plugin) - Var(alpha_combined), scaled units.
  double alpha_var_diff = 0.0;
  // Amplitude comparisons in units of 2 c s2, with their bracket endpoints
  // 8(A^2-B^2)/S_1 and 8(A^2-B^2)/S_k (delta1), mirrored for delta2.
  double delta1 = 0.0;
  double delta1_bracket_lo = 0.0;
  double delta1_bracket_hi = 0.0;
  double delta2 = 0.0;
  double delta2_bracket_lo = 0.0;
  double delta2_bracket_hi = 0.0;
  bool alpha_plugin_smaller = false;  // alpha_var_diff < 0
};

// Signed plugin-vs-combined differences per component, k >= 2. The frequency
// difference 360 c s2 (S_k - S_1)/(S_1 S_k) is negative under the decreasing
// power ordering, and that is verified here; the amplitude deltas and their
// brackets are reported as computed.
std::vector<ComparisonRow> estimator_comparison(const ChirpParams& params,
                                                double c, double sigma2);

struct AsymptoticReportRow {
  std::string method;
  std::string parameter;
  double scaled_variance = 0.0;
  double unscaled_variance_at_n = 0.0;
};

struct AsymptoticReport {
  std::vector<AsymptoticReportRow> rows;
  double c = 0.0;
  double sigma2 = 0.0;
  int n_samples = 0;

  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;
};

AsymptoticReport make_asymptotic_report(const ChirpParams& params, double c,
                                        double sigma2, int n_samples);

}  // namespace eqchirp
