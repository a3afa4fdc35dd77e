#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "fstefan/errors.hpp"
#include "fstefan/residual.hpp"
#include "fstefan/stefan_solver.hpp"
#include "oracle_values.hpp"

using namespace fstefan;
using namespace fstefan::stefan;

namespace {

// Bisection on an increasing function, done by hand.
template <class F>
double bisect(F f, double target, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// D^alpha (c t^(alpha/2)) from the power rule with std::tgamma.
double front_derivative(const SimilaritySolution& sol, double t) {
  const double a = sol.alpha.value();
  return sol.lambda * sol.xi * std::tgamma(1.0 + a / 2.0) / std::tgamma(1.0 - a / 2.0) * std::pow(t, -a / 2.0);
}

double ux_by_difference(const SimilaritySolution& sol, double x, double t) {
  const double h = 1e-5 * std::max(1.0, x);
  return (evaluate_u(sol, x + h, t) - evaluate_u(sol, x - h, t)) / (2.0 * h);
}

const std::vector<TemperatureProblem> temperature_cases = {
    {FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0},   {FractionalOrder(0.2), 0.7, 3.0, -1.0, 0.4},
    {FractionalOrder(0.8), 2.0, 0.5, 0.25, 5.0},  {FractionalOrder(0.95), 1.3, 10.0, 2.0, 0.1},
};

const std::vector<FluxProblem> flux_cases = {
    {FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0},
    {FractionalOrder(0.3), 0.5, 2.0, 1.0, 0.8},
    {FractionalOrder(0.9), 1.7, 0.3, -2.0, 3.0},
};

}  // namespace

TEST_CASE("H and J") {
  SUBCASE("classical closed forms at alpha = 1") {
    CHECK(H(1.0, FractionalOrder(1.0)) == doctest::Approx(oracle::H_1_classical).epsilon(1e-14));
    CHECK(J(1.0, FractionalOrder(1.0)) == doctest::Approx(oracle::J_1_classical).epsilon(1e-14));
  }
  SUBCASE("vanish at the origin and increase") {
    for (double a : {0.2, 0.5, 0.8}) {
      const FractionalOrder alpha(a);
      CHECK(H(1e-7, alpha) < 1e-6);
      CHECK(J(1e-7, alpha) < 1e-6);
      double prev_h = 0.0;
      double prev_j = 0.0;
      for (int i = 0; i <= 60; ++i) {
        const double xi = 1e-3 * std::pow(8000.0, i / 60.0);
        const double h = H(xi, alpha);
        const double j = J(xi, alpha);
        CHECK(h > prev_h);
        CHECK(j > prev_j);
        prev_h = h;
        prev_j = j;
      }
    }
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(H(0.0, FractionalOrder(0.5)), ValidationError);
    CHECK_THROWS_AS(J(-1.0, FractionalOrder(0.5)), ValidationError);
    CHECK_THROWS_AS(H(11.0, FractionalOrder(0.5)), DomainError);
  }
}

TEST_CASE("monotone root solver") {
  SUBCASE("known roots") {
    CHECK(solve_monotone([](double x) { return x * x * x; }, 27.0, 1.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(solve_monotone([](double x) { return std::sinh(x); }, 1e-6, 1.0) ==
          doctest::Approx(std::asinh(1e-6)).epsilon(1e-11));
    CHECK(solve_monotone([](double x) { return std::expm1(x); }, 100.0, 0.1) ==
          doctest::Approx(std::log(101.0)).epsilon(1e-12));
  }
  SUBCASE("unreachable target") {
    RootOptions options;
    options.x_max = 2.0;
    CHECK_THROWS_AS(solve_monotone([](double x) { return x; }, 5.0, 1.0, options), BracketError);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(solve_monotone([](double x) { return x; }, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(solve_monotone([](double x) { return x; }, 1.0, -1.0), ValidationError);
  }
}

TEST_CASE("temperature problem against the bisection oracle") {
  const auto sol = solve_st1({FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0});
  CHECK(sol.xi == doctest::Approx(oracle::st1_xi).epsilon(1e-12));
  CHECK(sol.rhs == doctest::Approx(oracle::st1_rhs).epsilon(1e-14));
  CHECK(sol.solver_residual <= 1e-12 * sol.rhs);
  CHECK(sol.kind == ProblemKind::temperature);
  CHECK(sol.boundary_value == 1.0);
  CHECK(sol.a == 1.0);
}

TEST_CASE("flux problem against the bisection oracle") {
  const auto sol = solve_st2({FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0});
  CHECK(sol.xi == doctest::Approx(oracle::st2_mu).epsilon(1e-12));
  CHECK(sol.rhs == doctest::Approx(oracle::st2_rhs).epsilon(1e-14));
  CHECK(sol.b == doctest::Approx(-std::tgamma(0.75)).epsilon(1e-15));
  CHECK(sol.kind == ProblemKind::flux);
}

TEST_CASE("temperature solutions satisfy every condition") {
  for (const auto& p : temperature_cases) {
    CAPTURE(p.alpha.value());
    const auto sol = solve_st1(p);
    for (double t : {0.05, 0.5, 1.0, 2.0, 7.0}) {
      CHECK(evaluate_u(sol, 0.0, t) == p.B);
      const double s = front(sol, t);
      CHECK(evaluate_u(sol, s, t) == doctest::Approx(p.C).epsilon(1e-10).scale(1.0));
      const double lhs = front_derivative(sol, t);
      CHECK(std::abs(lhs + p.k * evaluate_ux(sol, s, t)) <= 1e-10 * std::abs(lhs));
      CHECK(front_caputo(sol, t) == doctest::Approx(lhs).epsilon(1e-14));
      CHECK(evaluate_ux(sol, 0.5 * s, t) == doctest::Approx(ux_by_difference(sol, 0.5 * s, t)).epsilon(1e-7));
    }
  }
}

TEST_CASE("flux solutions satisfy every condition") {
  for (const auto& p : flux_cases) {
    CAPTURE(p.alpha.value());
    const auto sol = solve_st2(p);
    for (double t : {0.05, 0.5, 1.0, 2.0, 7.0}) {
      const double flux = -p.q / std::pow(t, p.alpha.half());
      CHECK(evaluate_ux(sol, 0.0, t) == doctest::Approx(flux).epsilon(1e-12));
      const double s = front(sol, t);
      CHECK(evaluate_u(sol, s, t) == doctest::Approx(p.C).epsilon(1e-10).scale(1.0));
      const double lhs = front_derivative(sol, t);
      CHECK(std::abs(lhs + p.k * evaluate_ux(sol, s, t)) <= 1e-10 * std::abs(lhs));
    }
  }
}

TEST_CASE("solution scales with the problem data") {
  // u depends on (B - C) only through the rhs; shifting both leaves xi fixed.
  const auto base = solve_st1({FractionalOrder(0.6), 1.0, 1.0, 0.0, 1.0});
  const auto shifted = solve_st1({FractionalOrder(0.6), 1.0, 6.0, 5.0, 1.0});
  CHECK(shifted.xi == doctest::Approx(base.xi).epsilon(1e-13));
  CHECK(shifted.b == doctest::Approx(base.b).epsilon(1e-13));
  // Larger latent-heat ratio pushes the front further.
  CHECK(solve_st1({FractionalOrder(0.6), 1.0, 1.0, 0.0, 2.0}).xi > base.xi);
  CHECK(solve_st2({FractionalOrder(0.6), 1.0, 2.0, 0.0, 1.0}).xi > solve_st2({FractionalOrder(0.6), 1.0, 1.0, 0.0, 1.0}).xi);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(solve_st1({FractionalOrder(0.5), 1.0, 0.0, 0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(solve_st1({FractionalOrder(0.5), 1.0, -1.0, 0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(solve_st1({FractionalOrder(0.5), 0.0, 1.0, 0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(solve_st1({FractionalOrder(0.5), 1.0, 1.0, 0.0, -1.0}), ValidationError);
  CHECK_THROWS_AS(solve_st1({FractionalOrder(1.0), 1.0, 1.0, 0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(solve_st2({FractionalOrder(0.5), 1.0, 0.0, 0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(solve_st2({FractionalOrder(0.5), 1.0, -2.0, 0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(solve_st2({FractionalOrder(0.5), 1.0, 1.0, INFINITY, 1.0}), ValidationError);
  CHECK(problem_kind_from_string(to_string(ProblemKind::flux)) == ProblemKind::flux);
  CHECK_THROWS_AS(problem_kind_from_string("bogus"), ValidationError);
}

TEST_CASE("front beyond the kernel range is a bracket failure") {
  // A huge latent-heat ratio drives xi past Z_MAX.
  CHECK_THROWS_AS(solve_st1({FractionalOrder(0.5), 1.0, 1e6, 0.0, 1e6}), BracketError);
}

TEST_CASE("equivalence of the two problems") {
  for (const auto& p : flux_cases) {
    CAPTURE(p.alpha.value());
    const double B = equivalent_temperature(p);
    CHECK(B > p.C);
    const auto report = check_equivalence(p);
    CHECK(report.B == B);
    CHECK(report.equivalent);
    CHECK(report.xi_gap <= 1e-10);
    CHECK(report.u_gap_max <= 1e-9);
    CHECK(report.nx == 50);
    CHECK(report.nt == 10);
  }
  const FluxProblem p{FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0};
  CHECK(equivalent_temperature(p) == doctest::Approx(oracle::equivalent_B).epsilon(1e-12));
  CHECK_THROWS_AS(check_equivalence(p, 1, 10), ValidationError);
}

TEST_CASE("classical limits") {
  const TemperatureProblem tp{FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0};
  const FluxProblem fp{FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0};
  CHECK(classical_limit(tp) == doctest::Approx(oracle::classical_xi).epsilon(1e-12));
  CHECK(classical_limit(fp) == doctest::Approx(oracle::classical_mu).epsilon(1e-12));

  // Independent bisection on the Neumann equations with other data.
  const TemperatureProblem tp2{FractionalOrder(0.5), 1.5, 3.0, 1.0, 0.7};
  const double target = tp2.k * (tp2.B - tp2.C) / (tp2.lambda * tp2.lambda * std::sqrt(std::numbers::pi));
  const double xi = bisect([](double x) { return x / 2 * std::erf(x / 2) * std::exp(x * x / 4); }, target, 0.0, 10.0);
  CHECK(classical_limit(tp2) == doctest::Approx(xi).epsilon(1e-12));
  const FluxProblem fp2{FractionalOrder(0.5), 0.8, 2.0, 0.0, 1.3};
  const double mu = bisect([](double x) { return x * std::exp(x * x / 4); }, 2 * fp2.k * fp2.q / fp2.lambda, 0.0, 10.0);
  CHECK(classical_limit(fp2) == doctest::Approx(mu).epsilon(1e-12));
}

TEST_CASE("alpha sweep approaches the classical coefficient") {
  const std::vector<double> alphas{0.5, 0.7, 0.9, 0.99, 0.999};
  const auto table = alpha_sweep(TemperatureProblem{FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0}, alphas);
  REQUIRE(table.rows.size() == alphas.size());
  CHECK(table.kind == ProblemKind::temperature);
  const std::vector<double> expected{oracle::st1_xi, oracle::st1_xi_a07, oracle::st1_xi_a09, oracle::st1_xi_a099,
                                     oracle::st1_xi_a0999};
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    CHECK(table.rows[i].alpha == alphas[i]);
    CHECK(table.rows[i].xi == doctest::Approx(expected[i]).epsilon(1e-11));
    CHECK(table.rows[i].abs_gap == doctest::Approx(std::abs(table.rows[i].xi - table.xi_classical)));
    if (i > 0) {
      CHECK(table.rows[i].abs_gap < table.rows[i - 1].abs_gap);
    }
  }
  const auto flux = alpha_sweep(FluxProblem{FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0}, alphas);
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    CHECK(flux.rows[i].abs_gap < flux.rows[i - 1].abs_gap);
  }
  const std::vector<double> bad{0.5, 1.0};
  CHECK_THROWS_AS(alpha_sweep(TemperatureProblem{}, bad), ValidationError);
}

TEST_CASE("diffusion residual") {
  SUBCASE("decreases under refinement for both problems") {
    const auto st1 = solve_st1({FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0});
    const auto st2 = solve_st2({FractionalOrder(0.7), 1.2, 1.0, 0.0, 1.0});
    for (const auto& sol : {st1, st2}) {
      const auto coarse = fractional::diffusion_residual(sol, 16, 16);
      const auto fine = fractional::diffusion_residual(sol, 32, 32);
      CHECK(fine.max_abs_residual < coarse.max_abs_residual / 1.5);
      CHECK(fine.l2_residual <= fine.max_abs_residual);
      CHECK(fine.stefan_residual <= 1e-10);
      CHECK(fine.boundary_residual <= 1e-12);
      CHECK(fine.nx == 32);
      CHECK(fine.dt == doctest::Approx(1.9 / 32));
    }
  }
  SUBCASE("a constant field has no residual") {
    SimilaritySolution flat = solve_st1({FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0});
    flat.b = 0.0;
    const auto report = fractional::diffusion_residual(flat, 16, 16);
    CHECK(report.max_abs_residual <= 1e-12);
  }
  SUBCASE("grid validation") {
    const auto sol = solve_st1({FractionalOrder(0.5), 1.0, 1.0, 0.0, 1.0});
    CHECK_THROWS_AS(fractional::diffusion_residual(sol, 2, 16), ValidationError);
    CHECK_THROWS_AS(fractional::diffusion_residual(sol, 16, 16, 0.0, 2.0), ValidationError);
    CHECK_THROWS_AS(fractional::diffusion_residual(sol, 16, 16, 1.0, 0.5), ValidationError);
  }
}
