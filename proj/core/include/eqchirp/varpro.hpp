#pragma once

#include <span>

#include <Eigen/Dense>

#include "eqchirp/model.hpp"

namespace eqchirp {

struct AmplitudeFit {
  Eigen::VectorXd amplitudes;  // (A_1, B_1, ..., A_p, B_p)
  double rss = 0.0;            // ||y - W*amplitudes||^2
};

// Least-squares amplitudes for fixed nonlinear parameters, via column-pivoted
// QR of the design matrix. Throws DegenerateDesignError when the design loses
// full column rank (relative pivot tolerance 1e-10).
Eigen::VectorXd solve_amplitudes(const NonlinearParams& xi, const Signal& y);

// Residual sum of squares after projecting y onto the design column space;
// equals the full objective evaluated at the solved amplitudes.
double reduced_rss(const NonlinearParams& xi, const Signal& y);

// One factorization for both outputs.
AmplitudeFit fit_amplitudes(const NonlinearParams& xi, const Signal& y);

// Reduced objective over the nonlinear parameters, for optimizers. The
// argument layout is (alpha_1..alpha_p, beta). Points outside `bounds`
// evaluate to +infinity, which keeps simplex iterates inside the domain.
class ReducedObjective {
 public:
  // Requires signal.size() >= 2p + 2.
  ReducedObjective(Signal signal, int p, ParameterBounds bounds = {});

  double operator()(std::span<const double> xi) const;
  AmplitudeFit fit(std::span<const double> xi) const;

  bool in_bounds(std::span<const double> xi) const;
  const Signal& signal() const { return signal_; }
  int count() const { return p_; }
  const ParameterBounds& bounds() const { return bounds_; }

 private:
  NonlinearParams unpack(std::span<const double> xi) const;

  Signal signal_;
  int p_;
  ParameterBounds bounds_;
};

}  // namespace eqchirp
