#include "fstefan/stefan_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fstefan/fractional_calculus.hpp"

namespace fstefan::stefan {
namespace {

using special::SeriesSettings;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(std::string(name) + " must be positive and finite, got " + std::to_string(value));
  }
}

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw ValidationError(std::string(name) + " must be finite");
  }
}

void require_front_argument(double xi, const SeriesSettings& settings) {
  if (!(xi > 0.0)) {
    throw ValidationError("front coefficient must be positive, got " + std::to_string(xi));
  }
  if (xi > settings.z_max) {
    throw DomainError("front coefficient " + std::to_string(xi) + " exceeds Z_MAX = " + std::to_string(settings.z_max));
  }
}

double t_power(const SimilaritySolution& sol, double t) { return std::pow(t, sol.alpha.half()); }

void require_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("time must be positive and finite, got " + std::to_string(t));
  }
}

}  // namespace

void TemperatureProblem::validate() const {
  require_positive(lambda, "lambda");
  require_positive(k, "k");
  require_finite(B, "B");
  require_finite(C, "C");
  if (!(B > C)) {
    throw ValidationError("temperature problem requires B > C, got B=" + std::to_string(B) + " C=" + std::to_string(C));
  }
}

void FluxProblem::validate() const {
  require_positive(lambda, "lambda");
  require_positive(k, "k");
  require_positive(q, "q");
  require_finite(C, "C");
}

std::string_view to_string(ProblemKind kind) {
  return kind == ProblemKind::temperature ? "temperature" : "flux";
}

ProblemKind problem_kind_from_string(std::string_view name) {
  if (name == "temperature") {
    return ProblemKind::temperature;
  }
  if (name == "flux") {
    return ProblemKind::flux;
  }
  throw ValidationError("unknown problem kind '" + std::string(name) + "'");
}

double H(double xi, FractionalOrder alpha, const SeriesSettings& settings) {
  require_front_argument(xi, settings);
  const double w = special::one_minus_wright(xi, alpha, settings).value;
  const double m = special::mainardi(alpha.half(), xi, settings).value;
  return xi * w / m;
}

double J(double mu, FractionalOrder alpha, const SeriesSettings& settings) {
  require_front_argument(mu, settings);
  return mu / special::mainardi(alpha.half(), mu, settings).value;
}

double solve_monotone(const std::function<double(double)>& f, double target, double bracket_hint,
                      const RootOptions& options) {
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw ValidationError("monotone root target must be positive and finite, got " + std::to_string(target));
  }
  if (!(bracket_hint > 0.0)) {
    throw ValidationError("bracket hint must be positive");
  }

  double lo = options.x_lo;
  double flo = f(lo);
  while (flo >= target) {
    lo /= 16.0;
    if (lo < 1e-300) {
      throw BracketError("target " + std::to_string(target) + " lies below f near 0");
    }
    flo = f(lo);
  }
  double hi = std::min(std::max(bracket_hint, 2.0 * lo), options.x_max);
  double fhi = f(hi);
  while (fhi < target) {
    if (hi >= options.x_max) {
      throw BracketError("target " + std::to_string(target) + " exceeds f(" + std::to_string(options.x_max) +
                         ") = " + std::to_string(fhi));
    }
    lo = hi;
    flo = fhi;
    hi = std::min(2.0 * hi, options.x_max);
    fhi = f(hi);
  }
  if (fhi == target) {
    return hi;
  }

  const double ftol = options.ftol_rel * std::max(1.0, target);
  double glo = flo - target;
  double ghi = fhi - target;
  int side = 0;
  double previous = std::numeric_limits<double>::quiet_NaN();
  double width_before = hi - lo;
  bool bisect_next = false;

  for (int it = 0; it < options.max_iterations; ++it) {
    double x = hi - ghi * (hi - lo) / (ghi - glo);
    if (bisect_next || !(x > lo && x < hi)) {
      x = 0.5 * (lo + hi);
    }
    const double g = f(x) - target;
    const double step = std::abs(x - previous);
    previous = x;
    if (g == 0.0) {
      return x;
    }
    const bool x_settled = step <= options.xtol_rel * x || (hi - lo) <= options.xtol_rel * x;
    if (std::abs(g) <= ftol && x_settled) {
      return x;
    }

    // Illinois: halve the stale endpoint's residual when the same side moves twice.
    if (g < 0.0) {
      lo = x;
      glo = g;
      if (side == -1) {
        ghi *= 0.5;
      }
      side = -1;
    } else {
      hi = x;
      ghi = g;
      if (side == 1) {
        glo *= 0.5;
      }
      side = 1;
    }

    if (it % 2 == 1) {
      bisect_next = (hi - lo) > 0.5 * width_before;
      width_before = hi - lo;
    } else {
      bisect_next = false;
    }

    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * x) {
      if (std::abs(g) <= ftol) {
        return x;
      }
      throw ConvergenceError("bracket collapsed at x=" + std::to_string(x) + " with residual " + std::to_string(g));
    }
  }
  throw ConvergenceError("monotone root search did not converge in " + std::to_string(options.max_iterations) +
                         " iterations");
}

SimilaritySolution solve_st1(const TemperatureProblem& p, const SeriesSettings& settings) {
  p.alpha.require_fractional();
  p.validate();
  const FractionalOrder alpha = p.alpha;
  const double nu = alpha.half();

  SimilaritySolution sol;
  sol.alpha = alpha;
  sol.lambda = p.lambda;
  sol.k = p.k;
  sol.kind = ProblemKind::temperature;
  sol.boundary_value = p.B;
  sol.a = p.B;
  sol.rhs = -(p.k / (p.lambda * p.lambda)) * special::gamma(1.0 - nu) * special::reciprocal_gamma(1.0 + nu) *
            (p.C - p.B);

  RootOptions options;
  options.x_max = settings.z_max;
  auto h = [&](double xi) { return H(xi, alpha, settings); };
  sol.xi = solve_monotone(h, sol.rhs, 1.0, options);
  sol.solver_residual = std::abs(h(sol.xi) - sol.rhs);
  sol.b = (p.C - p.B) / special::one_minus_wright(sol.xi, alpha, settings).value;
  return sol;
}

SimilaritySolution solve_st2(const FluxProblem& p, const SeriesSettings& settings) {
  p.alpha.require_fractional();
  p.validate();
  const FractionalOrder alpha = p.alpha;
  const double nu = alpha.half();
  const double g = special::gamma(1.0 - nu);

  SimilaritySolution sol;
  sol.alpha = alpha;
  sol.lambda = p.lambda;
  sol.k = p.k;
  sol.kind = ProblemKind::flux;
  sol.boundary_value = p.q;
  sol.b = -p.q * p.lambda * g;
  sol.rhs = (p.k * p.q / p.lambda) * g * g * special::reciprocal_gamma(1.0 + nu);

  RootOptions options;
  options.x_max = settings.z_max;
  auto j = [&](double mu) { return J(mu, alpha, settings); };
  sol.xi = solve_monotone(j, sol.rhs, 1.0, options);
  sol.solver_residual = std::abs(j(sol.xi) - sol.rhs);
  sol.a = p.C + p.q * p.lambda * g * special::one_minus_wright(sol.xi, alpha, settings).value;
  return sol;
}

double similarity_variable(const SimilaritySolution& sol, double x, double t) {
  require_time(t);
  if (!(x >= 0.0)) {
    throw DomainError("x must be non-negative, got " + std::to_string(x));
  }
  return x / (sol.lambda * t_power(sol, t));
}

double evaluate_u(const SimilaritySolution& sol, double x, double t, const SeriesSettings& settings) {
  const double eta = similarity_variable(sol, x, t);
  return sol.a + sol.b * special::one_minus_wright(eta, sol.alpha, settings).value;
}

double evaluate_ux(const SimilaritySolution& sol, double x, double t, const SeriesSettings& settings) {
  const double eta = similarity_variable(sol, x, t);
  return sol.b * special::mainardi(sol.alpha.half(), eta, settings).value / (sol.lambda * t_power(sol, t));
}

double front(const SimilaritySolution& sol, double t) {
  if (!(t >= 0.0)) {
    throw DomainError("front requires t >= 0, got " + std::to_string(t));
  }
  return sol.lambda * sol.xi * t_power(sol, t);
}

double front_caputo(const SimilaritySolution& sol, double t) {
  return fractional::caputo_power({sol.lambda * sol.xi, sol.alpha.half()}, sol.alpha, t);
}

double equivalent_temperature(const FluxProblem& p, const SeriesSettings& settings) {
  const SimilaritySolution st2 = solve_st2(p, settings);
  return p.C + p.q * p.lambda * special::gamma(1.0 - p.alpha.half()) *
                   special::one_minus_wright(st2.xi, p.alpha, settings).value;
}

EquivalenceReport check_equivalence(const FluxProblem& p, std::span<const double> xs, std::span<const double> ts,
                                    const SeriesSettings& settings) {
  EquivalenceReport report;
  report.flux = p;
  const SimilaritySolution st2 = solve_st2(p, settings);
  report.B = equivalent_temperature(p, settings);
  const SimilaritySolution st1 = solve_st1({p.alpha, p.lambda, report.B, p.C, p.k}, settings);

  report.xi = st1.xi;
  report.mu = st2.xi;
  report.xi_gap = std::abs(st1.xi - st2.xi);
  report.nx = static_cast<int>(xs.size());
  report.nt = static_cast<int>(ts.size());
  for (const double t : ts) {
    for (const double x : xs) {
      report.u_gap_max = std::max(report.u_gap_max,
                                  std::abs(evaluate_u(st1, x, t, settings) - evaluate_u(st2, x, t, settings)));
    }
  }
  report.equivalent = report.xi_gap <= 1e-10 * std::max(1.0, report.xi) &&
                      report.u_gap_max <= 1e-9 * std::max(1.0, std::abs(report.B));
  return report;
}

EquivalenceReport check_equivalence(const FluxProblem& p, int nx, int nt, double t_lo, double t_hi,
                                    const SeriesSettings& settings) {
  if (nx < 2 || nt < 2 || !(t_lo > 0.0) || !(t_hi > t_lo)) {
    throw ValidationError("equivalence grid needs nx, nt >= 2 and 0 < t_lo < t_hi");
  }
  const double s_hi = front(solve_st2(p, settings), t_hi);
  std::vector<double> xs(static_cast<std::size_t>(nx));
  std::vector<double> ts(static_cast<std::size_t>(nt));
  for (int i = 0; i < nx; ++i) {
    xs[static_cast<std::size_t>(i)] = s_hi * i / (nx - 1);
  }
  for (int m = 0; m < nt; ++m) {
    ts[static_cast<std::size_t>(m)] = t_lo + (t_hi - t_lo) * m / (nt - 1);
  }
  return check_equivalence(p, xs, ts, settings);
}

double classical_limit(const TemperatureProblem& p) {
  p.validate();
  const double target = p.k * (p.B - p.C) / (p.lambda * p.lambda * std::sqrt(std::numbers::pi));
  auto f = [](double xi) { return 0.5 * xi * std::erf(0.5 * xi) * std::exp(0.25 * xi * xi); };
  return solve_monotone(f, target, 1.0);
}

double classical_limit(const FluxProblem& p) {
  p.validate();
  const double target = 2.0 * p.k * p.q / p.lambda;
  auto f = [](double mu) { return mu * std::exp(0.25 * mu * mu); };
  return solve_monotone(f, target, 1.0);
}

namespace {

template <class Problem, class Solve>
SweepTable sweep(const Problem& p, std::span<const double> alphas, ProblemKind kind, Solve solve) {
  SweepTable table;
  table.kind = kind;
  table.xi_classical = classical_limit(p);
  table.rows.reserve(alphas.size());
  for (const double a : alphas) {
    Problem copy = p;
    copy.alpha = FractionalOrder(a);
    const double xi = solve(copy).xi;
    table.rows.push_back({a, xi, table.xi_classical, std::abs(xi - table.xi_classical)});
  }
  return table;
}

}  // namespace

SweepTable alpha_sweep(const TemperatureProblem& p, std::span<const double> alphas, const SeriesSettings& settings) {
  return sweep(p, alphas, ProblemKind::temperature, [&](const TemperatureProblem& c) { return solve_st1(c, settings); });
}

SweepTable alpha_sweep(const FluxProblem& p, std::span<const double> alphas, const SeriesSettings& settings) {
  return sweep(p, alphas, ProblemKind::flux, [&](const FluxProblem& c) { return solve_st2(c, settings); });
}

}  // namespace fstefan::stefan
