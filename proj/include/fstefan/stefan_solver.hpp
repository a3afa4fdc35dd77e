#pragma once

// Similarity solutions of the one-phase fractional Stefan problems
//
//   D^alpha u = lambda^2 u_xx,        0 < x < s(t)
//   u(0, t) = B          (temperature problem)   or
//   u_x(0, t) = -q t^(-alpha/2)   (flux problem)
//   u(s(t), t) = C,   D^alpha s = -k u_x(s(t), t),   s(0) = 0
//
// Both are solved by u = a + b [1 - W(-x / (lambda t^(alpha/2)), -alpha/2, 1)]
// and s(t) = lambda xi t^(alpha/2), with xi the root of a monotone
// transcendental equation.

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "fstefan/fractional_order.hpp"
#include "fstefan/special_functions.hpp"

namespace fstefan::stefan {

struct TemperatureProblem {
  FractionalOrder alpha{0.5};
  double lambda = 1.0;
  double B = 1.0;  // u(0, t)
  double C = 0.0;  // phase-change temperature, C < B
  double k = 1.0;

  void validate() const;
};

struct FluxProblem {
  FractionalOrder alpha{0.5};
  double lambda = 1.0;
  double q = 1.0;  // u_x(0, t) = -q t^(-alpha/2)
  double C = 0.0;
  double k = 1.0;

  void validate() const;
};

enum class ProblemKind { temperature, flux };

std::string_view to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view name);

struct SimilaritySolution {
  FractionalOrder alpha{0.5};
  double lambda = 1.0;
  double a = 0.0;
  double b = 0.0;
  /// Front coefficient: s(t) = lambda xi t^(alpha/2).
  double xi = 0.0;
  /// Stefan-condition constant and the boundary datum (B or q) it was solved for.
  double k = 1.0;
  ProblemKind kind = ProblemKind::temperature;
  double boundary_value = 0.0;
  /// Right-hand side of the front equation and |f(xi) - rhs| at the returned root.
  double rhs = 0.0;
  double solver_residual = 0.0;
};

/// H(xi) = xi [1 - W(-xi, -alpha/2, 1)] / M_{alpha/2}(xi); positive and increasing.
double H(double xi, FractionalOrder alpha, const special::SeriesSettings& settings = {});

/// J(mu) = mu / M_{alpha/2}(mu); positive and increasing.
double J(double mu, FractionalOrder alpha, const special::SeriesSettings& settings = {});

struct RootOptions {
  double x_lo = 1e-8;
  double x_max = 10.0;
  double ftol_rel = 1e-12;
  double xtol_rel = 1e-13;
  int max_iterations = 300;
};

/// Root of f(x) = target for f continuous, strictly increasing, f(0+) = 0.
///
/// Brackets by doubling from [x_lo, bracket_hint] (halving x_lo when the
/// target is below f(x_lo)), then refines with Illinois false position and
/// bisection fallback. Throws BracketError when f(x_max) < target.
double solve_monotone(const std::function<double(double)>& f, double target, double bracket_hint,
                      const RootOptions& options = {});

SimilaritySolution solve_st1(const TemperatureProblem& p, const special::SeriesSettings& settings = {});
SimilaritySolution solve_st2(const FluxProblem& p, const special::SeriesSettings& settings = {});

/// Similarity variable x / (lambda t^(alpha/2)).
double similarity_variable(const SimilaritySolution& sol, double x, double t);

/// u(x, t). Points beyond s(t) are evaluated from the same closed form.
double evaluate_u(const SimilaritySolution& sol, double x, double t, const special::SeriesSettings& settings = {});

/// u_x(x, t) = b M_{alpha/2}(eta) / (lambda t^(alpha/2)).
double evaluate_ux(const SimilaritySolution& sol, double x, double t, const special::SeriesSettings& settings = {});

double front(const SimilaritySolution& sol, double t);
/// D^alpha s(t) by the power rule.
double front_caputo(const SimilaritySolution& sol, double t);

/// B for which the temperature problem with the same (alpha, lambda, C, k)
/// reproduces the solution of p: C + q lambda Gamma(1 - alpha/2) [1 - W(-mu, -alpha/2, 1)].
double equivalent_temperature(const FluxProblem& p, const special::SeriesSettings& settings = {});

struct EquivalenceReport {
  FluxProblem flux;
  double B = 0.0;
  double xi = 0.0;  // temperature-problem root
  double mu = 0.0;  // flux-problem root
  double xi_gap = 0.0;
  double u_gap_max = 0.0;
  int nx = 0;
  int nt = 0;
  /// xi_gap <= 1e-10 max(1, xi) and u_gap_max <= 1e-9 max(1, |B|).
  bool equivalent = false;
};

/// Compares both solutions on the (x, t) product grid.
EquivalenceReport check_equivalence(const FluxProblem& p, std::span<const double> xs, std::span<const double> ts,
                                    const special::SeriesSettings& settings = {});

/// Default grid: nx points on [0, s(t_hi)] and nt times on [t_lo, t_hi].
EquivalenceReport check_equivalence(const FluxProblem& p, int nx = 50, int nt = 10, double t_lo = 0.1,
                                    double t_hi = 2.0, const special::SeriesSettings& settings = {});

/// Neumann coefficient of the classical (alpha = 1) problem:
///   temperature: (xi/2) erf(xi/2) exp(xi^2/4) = k (B - C) / (lambda^2 sqrt(pi))
///   flux:        mu exp(mu^2/4) = 2 k q / lambda
double classical_limit(const TemperatureProblem& p);
double classical_limit(const FluxProblem& p);

struct SweepRow {
  double alpha = 0.0;
  double xi = 0.0;
  double xi_classical = 0.0;
  double abs_gap = 0.0;
};

struct SweepTable {
  ProblemKind kind = ProblemKind::temperature;
  double xi_classical = 0.0;
  std::vector<SweepRow> rows;
};

SweepTable alpha_sweep(const TemperatureProblem& p, std::span<const double> alphas,
                       const special::SeriesSettings& settings = {});
SweepTable alpha_sweep(const FluxProblem& p, std::span<const double> alphas,
                       const special::SeriesSettings& settings = {});

}  // namespace fstefan::stefan
