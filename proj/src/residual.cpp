#include "fstefan/residual.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fstefan/fractional_calculus.hpp"

namespace fstefan::fractional {

ResidualReport diffusion_residual(const stefan::SimilaritySolution& sol, int nx, int nt, double t_lo, double t_hi,
                                  double lambda, const special::SeriesSettings& settings) {
  sol.alpha.require_fractional();
  if (nx < 8 || nt < 8) {
    throw ValidationError("residual grid needs nx, nt >= 8");
  }
  if (!(t_lo > 0.0) || !(t_hi > t_lo)) {
    throw ValidationError("residual window needs 0 < t_lo < t_hi");
  }
  if (!(lambda > 0.0)) {
    throw ValidationError("lambda must be positive");
  }

  const double alpha = sol.alpha.value();
  const auto n_aux = static_cast<std::size_t>(nt);
  const auto n_time = static_cast<std::size_t>(nt) + 1;
  const auto n_space = static_cast<std::size_t>(nx) + 1;
  const double dt = (t_hi - t_lo) / nt;

  std::vector<double> times;
  times.reserve(n_aux + n_time);
  for (std::size_t j = 0; j < n_aux; ++j) {
    times.push_back(t_lo * std::pow(static_cast<double>(j) / static_cast<double>(n_aux), 2.0 / alpha));
  }
  for (std::size_t m = 0; m < n_time; ++m) {
    times.push_back(t_lo + dt * static_cast<double>(m));
  }
  const L1Operator l1(times, sol.alpha);

  const double dx = stefan::front(sol, t_hi) / nx;
  // u[i][j] = u(x_i, times[j]); far-field values beyond the kernel range are
  // the t -> 0 limit a + b to within exp(-O(10^2)).
  std::vector<std::vector<double>> u(n_space, std::vector<double>(times.size()));
  std::vector<std::vector<double>> caputo(n_space, std::vector<double>(n_time));
  for (std::size_t i = 0; i < n_space; ++i) {
    const double x = dx * static_cast<double>(i);
    auto& column = u[i];
    column[0] = i == 0 ? sol.a : sol.a + sol.b;
    for (std::size_t j = 1; j < times.size(); ++j) {
      const double eta = stefan::similarity_variable(sol, x, times[j]);
      column[j] = eta > settings.kernel_z_max ? sol.a + sol.b : stefan::evaluate_u(sol, x, times[j], settings);
    }
    for (std::size_t m = 0; m < n_time; ++m) {
      caputo[i][m] = l1.derivative(column, n_aux + m);
    }
  }

  ResidualReport report;
  report.nx = nx;
  report.nt = nt;
  report.dx = dx;
  report.dt = dt;

  double sum_sq = 0.0;
  std::size_t count = 0;
  const double lambda2 = lambda * lambda;
  for (std::size_t m = 0; m < n_time; ++m) {
    const double t = times[n_aux + m];
    const double s = stefan::front(sol, t);
    // Last grid index strictly inside the liquid region.
    auto edge = static_cast<std::size_t>(std::ceil(s / dx)) - 1;
    edge = std::min(edge, n_space - 2);
    for (std::size_t i = 2; i + 1 <= edge; ++i) {
      const std::size_t j = n_aux + m;
      const double uxx = (u[i + 1][j] - 2.0 * u[i][j] + u[i - 1][j]) / (dx * dx);
      const double r = caputo[i][m] - lambda2 * uxx;
      report.max_abs_residual = std::max(report.max_abs_residual, std::abs(r));
      sum_sq += r * r;
      ++count;
    }

    if (sol.kind == stefan::ProblemKind::temperature) {
      report.boundary_residual =
          std::max(report.boundary_residual, std::abs(stefan::evaluate_u(sol, 0.0, t, settings) - sol.boundary_value));
    } else {
      const double flux = -sol.boundary_value * std::pow(t, -sol.alpha.half());
      report.boundary_residual =
          std::max(report.boundary_residual, std::abs(stefan::evaluate_ux(sol, 0.0, t, settings) - flux));
    }

    const double ds = stefan::front_caputo(sol, t);
    const double mismatch = ds + sol.k * stefan::evaluate_ux(sol, s, t, settings);
    report.stefan_residual = std::max(report.stefan_residual, std::abs(mismatch) / std::max(std::abs(ds), 1e-300));
  }
  if (count == 0) {
    throw ValidationError("residual grid has no interior points; increase nx");
  }
  report.l2_residual = std::sqrt(sum_sq / static_cast<double>(count));
  return report;
}

ResidualReport diffusion_residual(const stefan::SimilaritySolution& sol, int nx, int nt, double t_lo, double t_hi) {
  return diffusion_residual(sol, nx, nt, t_lo, t_hi, sol.lambda);
}

}  // namespace fstefan::fractional
