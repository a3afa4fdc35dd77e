#include "fstefan/halfline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace fstefan::halfline {
namespace {

double time_scale(double t, FractionalOrder alpha, double lambda) {
  if (!(t > 0.0)) {
    throw DomainError("time must be positive, got " + std::to_string(t));
  }
  if (!(lambda > 0.0)) {
    throw ValidationError("lambda must be positive");
  }
  return lambda * std::pow(t, alpha.half());
}

double half_line_eta(double x, double t, FractionalOrder alpha, double lambda) {
  if (!(x >= 0.0)) {
    throw DomainError("half-line solutions require x >= 0, got " + std::to_string(x));
  }
  return x / time_scale(t, alpha, lambda);
}

}  // namespace

InitialData odd_step(double f0) {
  InitialData data;
  data.profile = [f0](double y) { return y > 0.0 ? f0 : (y < 0.0 ? -f0 : 0.0); };
  data.breakpoints = {0.0};
  return data;
}

double fundamental_solution(double x, double t, FractionalOrder alpha, double lambda,
                            const special::SeriesSettings& settings) {
  const double scale = time_scale(t, alpha, lambda);
  return special::mainardi(alpha.half(), std::abs(x) / scale, settings).value / (2.0 * scale);
}

double similarity_radius(FractionalOrder alpha, double tail_mass, const special::SeriesSettings& settings) {
  if (!(tail_mass > 0.0 && tail_mass < 1.0)) {
    throw ValidationError("tail mass must lie in (0, 1)");
  }
  auto tail = [&](double r) { return 1.0 - special::one_minus_wright(r, alpha, settings).value; };
  double hi = settings.kernel_z_max;
  if (tail(hi) > tail_mass) {
    return hi;
  }
  double lo = 0.0;
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (tail(mid) > tail_mass) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double convolve_initial_data(const InitialData& data, double x, double t, FractionalOrder alpha, double lambda,
                             const QuadratureSettings& quadrature, const special::SeriesSettings& settings) {
  if (!data.profile) {
    throw ValidationError("initial data has no profile");
  }
  if (!(data.support_bound > 0.0)) {
    throw ValidationError("support bound must be positive");
  }
  const double scale = time_scale(t, alpha, lambda);
  const double reach = similarity_radius(alpha, quadrature.tail_mass, settings) * scale;
  const double lo = std::max(x - reach, -data.support_bound);
  const double hi = std::min(x + reach, data.support_bound);
  if (!(hi > lo)) {
    return 0.0;
  }

  // Panel edges: the kernel cusp at y = x and every jump of the profile.
  std::vector<double> edges{lo, hi};
  if (x > lo && x < hi) {
    edges.push_back(x);
  }
  for (const double b : data.breakpoints) {
    if (b > lo && b < hi) {
      edges.push_back(b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const double nu = alpha.half();
  auto integrand = [&](double y) {
    const double eta = std::min(std::abs(x - y) / scale, settings.kernel_z_max);
    return special::mainardi(nu, eta, settings).value / (2.0 * scale) * data.profile(y);
  };

  double total = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    double error = 0.0;
    double l1 = 0.0;
    const double piece = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
        integrand, edges[p], edges[p + 1], quadrature.max_depth, quadrature.tolerance, &error, &l1);
    if (!(error <= quadrature.tolerance * std::max(l1, 1.0))) {
      throw QuadratureError("convolution panel [" + std::to_string(edges[p]) + ", " + std::to_string(edges[p + 1]) +
                            "] missed tolerance: error estimate " + std::to_string(error));
    }
    total += piece;
  }
  return total;
}

double dirichlet_zero_constant_initial(double f0, double x, double t, FractionalOrder alpha, double lambda,
                                       const special::SeriesSettings& settings) {
  const double eta = half_line_eta(x, t, alpha, lambda);
  return f0 * special::one_minus_wright(eta, alpha, settings).value;
}

double dirichlet_step_boundary(double g0, double x, double t, FractionalOrder alpha, double lambda,
                               const special::SeriesSettings& settings) {
  const double eta = half_line_eta(x, t, alpha, lambda);
  return g0 * special::wright({-eta, -alpha.half(), 1.0}, settings).value;
}

}  // namespace fstefan::halfline
