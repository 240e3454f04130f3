#pragma once

#include <functional>
#include <span>
#include <vector>

#include "eqchirp/model.hpp"

namespace eqchirp {

struct NelderMeadOptions {
  int max_iterations = 5000;
  double x_tolerance = 1e-10;  // simplex diameter, max-norm
  double f_tolerance = 1e-12;  // spread between worst and best vertex
  // Per-coordinate edge lengths of the initial simplex. Empty means
  // 0.05*|x0_i| (0.1 when x0_i == 0).
  std::vector<double> initial_simplex_scale;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

// Downhill simplex with the classic coefficient set: reflection 1,
// expansion 2, contraction 0.5, shrink 0.5. Stops when the simplex diameter
// drops below x_tolerance, the f-spread drops below f_tolerance, or
// max_iterations is reached. The returned vertex never has f above f(x0).
// Throws BadStartError when f(x0) is not finite; non-finite values at other
// vertices are treated as +infinity.
NelderMeadResult nelder_mead(const ObjectiveFn& f, std::span<const double> x0,
                             const NelderMeadOptions& opts = {});

struct GridDimension {
  double lo = 0.0;
  double hi = 0.0;
  int points = 21;
};

struct GridSpec {
  std::vector<GridDimension> dims;

  long total_points() const;
  std::vector<double> point_at(std::span<const int> index) const;
};

struct GridResult {
  std::vector<double> point;
  double value = 0.0;
  std::vector<int> index;
};

// Exhaustive evaluation over the lattice; ties break to the lexicographically
// smallest grid index, independent of evaluation order.
GridResult grid_search(const ObjectiveFn& f, const GridSpec& grid);

enum class InitStrategy {
  kOracleNeighborhood,  // [hint_alpha +- 1/N] x [hint_beta +- 1/N^2]
  kCoarseSqrtN,         // +- 1/sqrt(N) around every hint
};

// Initialization grid over (alpha_1..alpha_p, beta) around the hint. The
// oracle neighborhood reproduces the simulation protocol and needs a hint at
// the truth; the coarse grid suits externally supplied rough estimates.
GridSpec init_grid(InitStrategy strategy, const NonlinearParams& hint,
                   int n_samples, int points_per_dim = 21);

}  // namespace eqchirp
