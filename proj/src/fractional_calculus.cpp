#include "fstefan/fractional_calculus.hpp"

#include <cmath>
#include <string>

#include "fstefan/special_functions.hpp"

namespace fstefan::fractional {
namespace {

// a^p - (a - h)^p for 0 < h <= a without cancellation when h << a.
double power_difference(double a, double h, double p) {
  if (h >= a) {
    return std::pow(a, p);
  }
  return -std::pow(a, p) * std::expm1(p * std::log1p(-h / a));
}

}  // namespace

double caputo_power(const PowerFunction& p, FractionalOrder alpha, double t) {
  if (!(t > 0.0)) {
    throw DomainError("Caputo derivative of a power requires t > 0, got " + std::to_string(t));
  }
  if (!(p.exponent > -1.0)) {
    throw DomainError("power rule requires exponent > -1, got " + std::to_string(p.exponent));
  }
  if (p.exponent == 0.0 || p.coefficient == 0.0) {
    return 0.0;
  }
  const double a = alpha.value();
  return p.coefficient * special::gamma(p.exponent + 1.0) * special::reciprocal_gamma(1.0 + p.exponent - a) *
         std::pow(t, p.exponent - a);
}

std::vector<double> caputo_l1(const GridFunction& g, FractionalOrder alpha) {
  alpha.require_fractional();
  if (g.samples.size() < 2) {
    throw ValidationError("L1 scheme needs at least 2 samples, got " + std::to_string(g.samples.size()));
  }
  if (!(g.dt > 0.0) || !(g.t0 > 0.0)) {
    throw ValidationError("grid function requires t0 > 0 and dt > 0");
  }
  const double a = alpha.value();
  const std::size_t n = g.samples.size();

  std::vector<double> b(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double jj = static_cast<double>(j);
    b[j] = power_difference(jj + 1.0, 1.0, 1.0 - a);
  }
  const double scale = std::pow(g.dt, -a) / special::gamma(2.0 - a);

  std::vector<double> out(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      acc += b[j] * (g.samples[i - j] - g.samples[i - j - 1]);
    }
    out[i - 1] = scale * acc;
  }
  return out;
}

L1Operator::L1Operator(std::span<const double> times, FractionalOrder alpha)
    : times_(times.begin(), times.end()) {
  alpha.require_fractional();
  if (times_.size() < 2) {
    throw ValidationError("L1 operator needs at least 2 grid times");
  }
  for (std::size_t j = 1; j < times_.size(); ++j) {
    if (!(times_[j] > times_[j - 1])) {
      throw ValidationError("L1 operator grid must be strictly increasing");
    }
  }
  const double p = 1.0 - alpha.value();
  const double inv_gamma = 1.0 / special::gamma(2.0 - alpha.value());

  weights_.resize(times_.size());
  for (std::size_t n = 1; n < times_.size(); ++n) {
    auto& row = weights_[n];
    row.resize(n);
    const double tn = times_[n];
    for (std::size_t j = 0; j < n; ++j) {
      const double h = times_[j + 1] - times_[j];
      // int_{tau_j}^{tau_{j+1}} (t_n - s)^-alpha ds / Gamma(1 - alpha), divided by h.
      row[j] = inv_gamma * power_difference(tn - times_[j], h, p) / h;
    }
  }
}

double L1Operator::derivative(std::span<const double> values, std::size_t n) const {
  if (n == 0 || n >= times_.size() || values.size() <= n) {
    throw ValidationError("L1 operator index out of range");
  }
  const auto& row = weights_[n];
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += row[j] * (values[j + 1] - values[j]);
  }
  return acc;
}

}  // namespace fstefan::fractional
