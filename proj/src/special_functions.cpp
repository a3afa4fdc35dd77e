#include "fstefan/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace fstefan::special {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Largest argument with finite tgamma.
constexpr double kGammaOverflow = 171.6243769563027;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with the argument reduced to [-1/2, 1/2] first.
double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r > 1.0) {
    r -= 2.0;
  } else if (r < -1.0) {
    r += 2.0;
  }
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

// log|1/Gamma(x)| and its sign, for x away from the poles.
double log_abs_reciprocal_gamma(double x, int& sign) {
  if (x > 0.5) {
    sign = 1;
    return -std::lgamma(x);
  }
  const double s = sin_pi(x);
  sign = s < 0.0 ? -1 : 1;
  return std::lgamma(1.0 - x) + std::log(std::abs(s) / kPi);
}

// z^n/n! * 1/Gamma(arg), given power = z^n/n! (possibly underflowed).
double series_term(double power, int n, double z, double arg) {
  const double rg = reciprocal_gamma(arg);
  if (rg == 0.0) {
    return 0.0;
  }
  if (power != 0.0 && std::isfinite(rg)) {
    const double t = power * rg;
    if (std::isfinite(t)) {
      return t;
    }
  }
  if (z == 0.0) {
    return 0.0;
  }
  int sign = 1;
  const double log_rg = log_abs_reciprocal_gamma(arg, sign);
  const double log_power = n * std::log(std::abs(z)) - std::lgamma(n + 1.0);
  if (z < 0.0 && (n % 2) == 1) {
    sign = -sign;
  }
  return sign * std::exp(log_power + log_rg);
}

// Index after which the term magnitudes decrease monotonically.
double decay_onset(double z, double rho) {
  const double az = std::abs(z);
  if (rho >= 0.0) {
    return az;
  }
  const double a = -rho;
  return std::pow(az * std::pow(a, a), 1.0 / (1.0 - a));
}

SeriesValue sum_series(double z, double rho, double beta, bool skip_leading, const SeriesSettings& settings) {
  const double onset = decay_onset(z, rho);
  if (!(onset < settings.max_terms)) {
    throw ConvergenceError("Wright series at z=" + std::to_string(z) + ", rho=" + std::to_string(rho) +
                           " needs more than " + std::to_string(settings.max_terms) + " terms");
  }

  CompensatedSum acc;
  double abs_sum = 0.0;
  double power = 1.0;
  std::array<double, 3> tail{};
  int small_run = 0;
  for (int n = 0; n < settings.max_terms; ++n) {
    if (n > 0) {
      power *= z / n;
    }
    const double term = series_term(power, n, z, rho * n + beta);
    if (!(skip_leading && n == 0)) {
      acc.add(term);
      abs_sum += std::abs(term);
    }
    tail[n % 3] = std::abs(term);

    const double partial = acc.value();
    if (std::abs(term) < settings.tol_abs + settings.tol_rel * std::abs(partial)) {
      ++small_run;
    } else {
      small_run = 0;
    }
    if (small_run >= 3 && n >= onset) {
      SeriesValue out;
      out.value = partial;
      out.abs_error_estimate = tail[0] + tail[1] + tail[2];
      out.rounding_error_estimate = kEps * abs_sum;
      out.terms_used = n + 1;
      out.converged = out.abs_error_estimate <= settings.tol_abs + settings.tol_rel * std::abs(partial);
      out.method = Method::series;
      return out;
    }
  }
  throw ConvergenceError("Wright series at z=" + std::to_string(z) + " did not converge within " +
                         std::to_string(settings.max_terms) + " terms");
}

enum class Kernel { complementary, mainardi };

// Integral form of W(-x, -nu, 1) or M_nu(x), 0 < nu < 1, x > 0.
SeriesValue kernel_integral(double x, double nu, Kernel kernel, const SeriesSettings& settings) {
  const double p = 1.0 / (1.0 - nu);
  int evaluations = 0;

  // integrand in long double
  const long double nu_l = nu;
  const long double p_l = p;
  const long double scale_l = std::pow(static_cast<long double>(x), p_l);
  auto integrand = [&](double phi) {
    ++evaluations;
    const long double phi_l = phi;
    const long double sn = std::sin(nu_l * phi_l);
    const long double a = std::pow(sn / std::sin(phi_l), p_l) * std::sin((1.0L - nu_l) * phi_l) / sn;
    const long double exponent = scale_l * a;
    if (!(exponent < 745.0L)) {
      return 0.0;
    }
    const long double e = std::exp(-exponent);
    return static_cast<double>(kernel == Kernel::mainardi ? a * e : e);
  };

  const double quad_tol = std::max(settings.tol_rel, 1e-14);
  double quad_error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, kPi, 15, quad_tol, &quad_error);

  const double prefactor = kernel == Kernel::mainardi ? std::pow(x, nu * p) / (kPi * (1.0 - nu)) : 1.0 / kPi;
  SeriesValue out;
  out.value = prefactor * integral;
  out.abs_error_estimate = prefactor * quad_error;
  out.rounding_error_estimate = 4.0 * kEps * std::abs(out.value);
  out.terms_used = evaluations;
  out.converged = out.abs_error_estimate <= settings.tol_abs + settings.tol_rel * std::abs(out.value);
  out.method = Method::integral;
  return out;
}

void check_kernel_range(double x, const SeriesSettings& settings) {
  if (x > settings.kernel_z_max) {
    throw DomainError("argument " + std::to_string(x) + " exceeds the kernel range " +
                      std::to_string(settings.kernel_z_max));
  }
}

}  // namespace

SeriesSettings SeriesSettings::from_environment() {
  SeriesSettings settings;
  if (const char* raw = std::getenv("FRAC_STEFAN_TOL"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    errno = 0;
    const double tol = std::strtod(raw, &end);
    if (errno != 0 || end == raw || *end != '\0' || !(tol > 0.0 && tol < 1.0)) {
      throw ValidationError(std::string("FRAC_STEFAN_TOL must be a number in (0, 1), got '") + raw + "'");
    }
    settings.tol_rel = tol;
  }
  return settings;
}

double gamma(double x) {
  if (std::isnan(x)) {
    throw DomainError("gamma of NaN");
  }
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma has a pole at " + std::to_string(x));
  }
  if (x > kGammaOverflow) {
    throw OverflowError("gamma(" + std::to_string(x) + ") overflows double precision");
  }
  return std::tgamma(x);
}

double reciprocal_gamma(double x) {
  if (std::isnan(x)) {
    return x;
  }
  if (is_nonpositive_integer(x)) {
    return 0.0;
  }
  if (x > 0.5) {
    return x < kGammaOverflow ? 1.0 / std::tgamma(x) : std::exp(-std::lgamma(x));
  }
  // 1/Gamma(x) = Gamma(1 - x) sin(pi x) / pi
  const double g = 1.0 - x;
  const double s = sin_pi(x);
  if (g < kGammaOverflow) {
    return std::tgamma(g) * s / kPi;
  }
  return std::copysign(std::exp(std::lgamma(g)), s) * (std::abs(s) / kPi);
}

SeriesValue wright(const WrightArgs& args, const SeriesSettings& settings) {
  if (!std::isfinite(args.z) || !std::isfinite(args.rho) || !std::isfinite(args.beta)) {
    throw DomainError("Wright function arguments must be finite");
  }
  if (!(args.rho > -1.0)) {
    throw DomainError("Wright function requires rho > -1, got " + std::to_string(args.rho));
  }

  const bool kernel_family = args.rho < 0.0 && (args.beta == 1.0 || args.beta == 1.0 + args.rho);
  if (kernel_family && -args.z > settings.integral_switch) {
    check_kernel_range(-args.z, settings);
    const Kernel kernel = args.beta == 1.0 ? Kernel::complementary : Kernel::mainardi;
    return kernel_integral(-args.z, -args.rho, kernel, settings);
  }
  if (std::abs(args.z) > settings.z_max) {
    throw DomainError("|z| = " + std::to_string(std::abs(args.z)) + " exceeds Z_MAX = " +
                      std::to_string(settings.z_max));
  }
  return sum_series(args.z, args.rho, args.beta, false, settings);
}

SeriesValue mainardi(double nu, double x, const SeriesSettings& settings) {
  if (!(nu > 0.0 && nu <= 0.5)) {
    throw DomainError("Mainardi index must lie in (0, 1/2], got " + std::to_string(nu));
  }
  if (!(x >= 0.0)) {
    throw DomainError("Mainardi function requires x >= 0, got " + std::to_string(x));
  }
  return wright({-x, -nu, 1.0 - nu}, settings);
}

SeriesValue one_minus_wright(double x, FractionalOrder alpha, const SeriesSettings& settings) {
  if (!(x >= 0.0)) {
    throw DomainError("one_minus_wright requires x >= 0, got " + std::to_string(x));
  }
  const double nu = alpha.half();
  if (x > settings.integral_switch) {
    check_kernel_range(x, settings);
    SeriesValue w = kernel_integral(x, nu, Kernel::complementary, settings);
    w.value = 1.0 - w.value;
    return w;
  }
  // 1 - W = -sum_{n >= 1} (-x)^n / (n! Gamma(1 - nu n)); the n = 0 term is exactly 1.
  SeriesValue s = sum_series(-x, -nu, 1.0, true, settings);
  s.value = 0.0 - s.value;
  return s;
}

SeriesValue wright_dz(const WrightArgs& args, const SeriesSettings& settings) {
  return wright({args.z, args.rho, args.rho + args.beta}, settings);
}

double erf(double x) { return std::erf(x); }
double erfc(double x) { return std::erfc(x); }

}  // namespace fstefan::special
