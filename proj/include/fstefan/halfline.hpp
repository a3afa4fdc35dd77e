#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "fstefan/fractional_order.hpp"
#include "fstefan/special_functions.hpp"

namespace fstefan::halfline {

/// Initial temperature u(x, 0) = profile(x) for the whole-line problem.
struct InitialData {
  std::function<double(double)> profile;
  /// profile vanishes for |x| > support_bound.
  double support_bound = std::numeric_limits<double>::infinity();
  /// Jump locations; quadrature panels are split there.
  std::vector<double> breakpoints;
};

/// f0 sign(x): the odd extension that turns the whole-line convolution into
/// the half-line problem u(x, 0) = f0, u(0, t) = 0.
InitialData odd_step(double f0);

struct QuadratureSettings {
  double tolerance = 1e-8;
  unsigned max_depth = 20;
  /// Kernel tail mass below which the convolution is truncated.
  double tail_mass = 1e-14;
};

/// G_alpha(x, t) = M_{alpha/2}(|x| / (lambda t^(alpha/2))) / (2 lambda t^(alpha/2)).
double fundamental_solution(double x, double t, FractionalOrder alpha, double lambda,
                            const special::SeriesSettings& settings = {});

/// Smallest similarity radius r with W(-r, -alpha/2, 1) <= tail_mass, i.e. the
/// kernel mass outside |x| <= r lambda t^(alpha/2). Capped at the kernel range.
double similarity_radius(FractionalOrder alpha, double tail_mass, const special::SeriesSettings& settings = {});

/// int G_alpha(x - y, t) f(y) dy, truncated to |y - x| <= similarity_radius * lambda t^(alpha/2).
/// Throws QuadratureError when the adaptive error estimate misses the tolerance.
double convolve_initial_data(const InitialData& data, double x, double t, FractionalOrder alpha, double lambda,
                             const QuadratureSettings& quadrature = {}, const special::SeriesSettings& settings = {});

/// u(x, 0) = f0, u(0, t) = 0 on x > 0: f0 [1 - W(-x / (lambda t^(alpha/2)), -alpha/2, 1)].
double dirichlet_zero_constant_initial(double f0, double x, double t, FractionalOrder alpha, double lambda,
                                       const special::SeriesSettings& settings = {});

/// u(x, 0) = 0, u(0, t) = g0 on x > 0: g0 W(-x / (lambda t^(alpha/2)), -alpha/2, 1).
double dirichlet_step_boundary(double g0, double x, double t, FractionalOrder alpha, double lambda,
                               const special::SeriesSettings& settings = {});

}  // namespace fstefan::halfline
