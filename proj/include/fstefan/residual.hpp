#pragma once

#include "fstefan/special_functions.hpp"
#include "fstefan/stefan_solver.hpp"

namespace fstefan::fractional {

struct ResidualReport {
  int nx = 0;
  int nt = 0;
  double dx = 0.0;
  double dt = 0.0;
  /// max and RMS of D^alpha u - lambda^2 u_xx over interior grid points.
  double max_abs_residual = 0.0;
  double l2_residual = 0.0;
  /// Temperature problem: max |u(0,t) - B|. Flux problem: max |u_x(0,t) + q t^(-alpha/2)|.
  double boundary_residual = 0.0;
  /// max |D^alpha s + k u_x(s(t), t)| / |D^alpha s|, from the exact formulas.
  double stefan_residual = 0.0;
};

/// Checks D^alpha u = lambda^2 u_xx for a similarity solution on
/// 0 <= x <= s(t), t_lo <= t <= t_hi.
///
/// The grid has nx intervals over [0, s(t_hi)] and nt intervals over
/// [t_lo, t_hi]. The Caputo history from 0 to t_lo is sampled on a graded grid
/// tau_j = t_lo (j / nt)^(2/alpha); u_xx uses central differences. Columns
/// adjacent to x = 0 and to x = s(t) are excluded from the norms.
ResidualReport diffusion_residual(const stefan::SimilaritySolution& sol, int nx, int nt, double t_lo, double t_hi,
                                  double lambda, const special::SeriesSettings& settings = {});

/// Same, with the PDE diffusivity taken from the solution.
ResidualReport diffusion_residual(const stefan::SimilaritySolution& sol, int nx, int nt, double t_lo = 0.1,
                                  double t_hi = 2.0);

}  // namespace fstefan::fractional
