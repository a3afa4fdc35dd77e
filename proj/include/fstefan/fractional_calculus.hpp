#pragma once

#include <span>
#include <vector>

#include "fstefan/fractional_order.hpp"

namespace fstefan::fractional {

/// coefficient * t^exponent, exponent > -1.
struct PowerFunction {
  double coefficient = 1.0;
  double exponent = 0.0;
};

/// Samples u(t0 + i dt), i = 0 .. n-1, on a uniform grid.
struct GridFunction {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> samples;

  [[nodiscard]] double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
};

/// Caputo derivative of a power function:
///   D^alpha (c t^beta) = c Gamma(beta + 1) / Gamma(1 + beta - alpha) t^(beta - alpha),
/// and exactly 0 for beta = 0.
double caputo_power(const PowerFunction& p, FractionalOrder alpha, double t);

/// L1 approximation of the Caputo derivative with lower terminal g.t0.
///
/// Entry i - 1 of the result approximates D^alpha g at g.time(i), i >= 1:
///   dt^-alpha / Gamma(2 - alpha) sum_j b_j (g_{i-j} - g_{i-j-1}),
///   b_j = (j + 1)^(1 - alpha) - j^(1 - alpha).
/// Requires 0 < alpha < 1 and at least 2 samples.
std::vector<double> caputo_l1(const GridFunction& g, FractionalOrder alpha);

/// Precomputed L1 weights on an arbitrary increasing grid tau_0 < ... < tau_N.
///
/// derivative(values, n) approximates D^alpha u(tau_n) with lower terminal
/// tau_0 from samples u(tau_j), j = 0 .. n, using piecewise-linear
/// interpolation of u. Weights are shared by every sampled function on the
/// same grid.
class L1Operator {
 public:
  L1Operator(std::span<const double> times, FractionalOrder alpha);

  [[nodiscard]] std::size_t size() const { return times_.size(); }
  [[nodiscard]] double derivative(std::span<const double> values, std::size_t n) const;

 private:
  std::vector<double> times_;
  // Row n holds the n weights multiplying the slopes on [tau_j, tau_{j+1}].
  std::vector<std::vector<double>> weights_;
};

}  // namespace fstefan::fractional
