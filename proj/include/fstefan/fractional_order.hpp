#pragma once

#include <cmath>
#include <string>

#include "fstefan/errors.hpp"

namespace fstefan {

/// Order alpha of the Caputo derivative, 0 < alpha <= 1.
///
/// alpha = 1 (the heat equation) is accepted by the special functions; solver
/// entry points call require_fractional() and reject it.
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw ValidationError("fractional order must lie in (0, 1], got " + std::to_string(alpha));
    }
  }

  [[nodiscard]] double value() const noexcept { return alpha_; }
  /// alpha / 2, the Mainardi index used throughout the similarity solutions.
  [[nodiscard]] double half() const noexcept { return 0.5 * alpha_; }
  [[nodiscard]] bool is_classical() const noexcept { return alpha_ == 1.0; }

  const FractionalOrder& require_fractional() const {
    if (is_classical()) {
      throw ValidationError("fractional order must satisfy alpha < 1 here; alpha = 1 is reserved for the classical limit");
    }
    return *this;
  }

  friend bool operator==(FractionalOrder, FractionalOrder) = default;

 private:
  double alpha_;
};

}  // namespace fstefan
