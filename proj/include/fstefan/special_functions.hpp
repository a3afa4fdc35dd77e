#pragma once

// Wright and Mainardi functions on the negative real axis, plus the gamma and
// error-function values the similarity solutions are built from.
//
//   W(z, rho, beta) = sum_n z^n / (n! Gamma(rho n + beta)),   rho > -1
//   M_nu(x)         = W(-x, -nu, 1 - nu)
//
// The generic path sums the series. For the two kernel families
// W(-x, -nu, 1) and W(-x, -nu, 1 - nu) with 0 < nu < 1 and x beyond
// SeriesSettings::integral_switch, the positive integral representation
//
//   W(-x, -nu, 1) = (1/pi) int_0^pi exp(-x^{1/(1-nu)} A(phi)) dphi
//   M_nu(x)       = x^{nu/(1-nu)} / (pi (1-nu)) int_0^pi A exp(-x^{1/(1-nu)} A) dphi
//   A(phi)        = (sin(nu phi)/sin phi)^{1/(1-nu)} sin((1-nu) phi) / sin(nu phi)
//
// is used instead.

#include <cstdint>

#include "fstefan/fractional_order.hpp"

namespace fstefan::special {

struct SeriesSettings {
  /// Stopping rule: |term_n| < tol_abs + tol_rel |partial sum| for 3 consecutive n.
  double tol_abs = 1e-16;
  double tol_rel = 1e-14;
  int max_terms = 500;
  /// Largest |z| accepted by the generic series.
  double z_max = 10.0;
  /// Kernel families switch from the series to the integral form beyond this |z|.
  double integral_switch = 3.0;
  /// Largest |z| accepted for the kernel families.
  double kernel_z_max = 50.0;

  /// Defaults, with tol_rel taken from FRAC_STEFAN_TOL when that variable is set.
  static SeriesSettings from_environment();
};

enum class Method : std::uint8_t { series, integral };

struct SeriesValue {
  double value = 0.0;
  /// Truncation bound (sum of the last three term magnitudes) for the series,
  /// quadrature error estimate for the integral form.
  double abs_error_estimate = 0.0;
  /// eps * sum |terms|: what cancellation between large terms can cost.
  double rounding_error_estimate = 0.0;
  /// Series terms summed, or integrand evaluations for the integral form.
  int terms_used = 0;
  bool converged = false;
  Method method = Method::series;
};

struct WrightArgs {
  double z = 0.0;
  double rho = 0.0;
  double beta = 1.0;
};

/// Gamma(x). Throws PoleError at non-positive integers and OverflowError past
/// the double range (x > 171.62...).
double gamma(double x);

/// 1/Gamma(x) for every real x; exactly 0 at 0, -1, -2, ...
double reciprocal_gamma(double x);

/// Throws DomainError for rho <= -1 or |z| outside the accepted range,
/// ConvergenceError when the term cap is reached.
SeriesValue wright(const WrightArgs& args, const SeriesSettings& settings = {});

/// M_nu(x) for nu in (0, 1/2], x >= 0. Delegates to wright().
SeriesValue mainardi(double nu, double x, const SeriesSettings& settings = {});

/// 1 - W(-x, -alpha/2, 1) for x >= 0; the series path drops the n = 0 term.
SeriesValue one_minus_wright(double x, FractionalOrder alpha, const SeriesSettings& settings = {});

/// dW/dz = W(z, rho, rho + beta).
SeriesValue wright_dz(const WrightArgs& args, const SeriesSettings& settings = {});

double erf(double x);
double erfc(double x);

}  // namespace fstefan::special
