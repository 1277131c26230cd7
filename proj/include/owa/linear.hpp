#pragma once

#include <cstddef>

#include "owa/core.hpp"

namespace owa {

/// Closed-form parameters of the and-like weight line.
///
/// The first m = n - 1 weights are K*i + b (i = 1..m) and the last weight is
/// 1 - delta, where delta is the mass moved off the minimum position.
struct LinearCoefficients {
  double K;
  double b;
  double delta;
  std::size_t m;
  double f_value;
};

/// Shaping function 1 - (1 - 2 alpha)^beta on alpha in [0, 0.5], beta in [1, 1.5].
double f_alpha(double alpha, double beta);

/// Requires n >= 3; n = 1 and n = 2 are handled by linear_weights.
LinearCoefficients linear_coefficients(double alpha, std::size_t n, double beta);

/// Weight vector of the linear family reaching target.orness exactly.
///
/// For orness <= 0.5 the line runs over the first n - 1 positions and the last
/// position holds 1 - delta. For orness > 0.5 the vector for 1 - orness is
/// built and reversed. n = 1 yields [1]; n = 2 yields [orness, 1 - orness].
WeightVector linear_weights(const OrnessTarget& target, std::size_t n);

}  // namespace owa
