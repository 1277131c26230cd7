#include "owa/linear.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "owa/error.hpp"

namespace owa {

namespace {

// Rounding can leave a weight a hair below zero; anything further is a bug.
constexpr double kNegativeRoundingSlack = 1e-12;

void check_beta(double beta) {
  if (!(beta >= OrnessTarget::kMinBeta && beta <= OrnessTarget::kMaxBeta)) {
    std::ostringstream msg;
    msg << "beta = " << beta << " outside [" << OrnessTarget::kMinBeta << ", "
        << OrnessTarget::kMaxBeta << "]";
    throw DomainError(msg.str());
  }
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) {
    std::ostringstream msg;
    msg << "alpha = " << alpha << " outside [0, 0.5]";
    throw DomainError(msg.str());
  }
}

// Clamps tiny negatives to zero and renormalizes only when something changed,
// so exact constructions (uniform, min, max) pass through untouched.
std::vector<double> guard_rounding(std::vector<double> w) {
  bool clamped = false;
  for (double& wi : w) {
    if (wi >= 0.0) continue;
    if (wi <= -kNegativeRoundingSlack) {
      std::ostringstream msg;
      msg << "linear method produced weight " << wi;
      throw InternalError(msg.str());
    }
    wi = 0.0;
    clamped = true;
  }
  if (clamped) {
    double sum = 0.0;
    for (double wi : w) sum += wi;
    for (double& wi : w) wi /= sum;
  }
  return w;
}

}  // namespace

double f_alpha(double alpha, double beta) {
  check_alpha(alpha);
  check_beta(beta);
  return 1.0 - std::pow(1.0 - 2.0 * alpha, beta);
}

LinearCoefficients linear_coefficients(double alpha, std::size_t n, double beta) {
  if (n < 3) {
    throw DomainError("linear_coefficients needs n >= 3 (got " + std::to_string(n) +
                      "); use linear_weights for n = 1 or n = 2");
  }
  const double f = f_alpha(alpha, beta);
  const double nd = static_cast<double>(n);
  LinearCoefficients c{};
  c.m = n - 1;
  c.f_value = f;
  c.delta = f * (nd - 1.0) / nd;
  // f >= 2 alpha holds exactly; at beta = 1 rounding can leave it -1e-16 short
  const double excess = std::max(0.0, f - 2.0 * alpha);
  c.K = 6.0 * excess / (nd * (nd - 2.0));
  c.b = f / nd - c.K * nd / 2.0;
  return c;
}

WeightVector linear_weights(const OrnessTarget& target, std::size_t n) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (n == 1) return WeightVector({1.0});
  if (n == 2) return WeightVector({target.orness, 1.0 - target.orness});

  const bool or_like = target.orness > 0.5;
  const double alpha = or_like ? 1.0 - target.orness : target.orness;
  const LinearCoefficients c = linear_coefficients(alpha, n, target.beta);

  std::vector<double> w(n);
  for (std::size_t i = 1; i <= c.m; ++i) w[i - 1] = c.K * static_cast<double>(i) + c.b;
  w[n - 1] = 1.0 - c.delta;

  WeightVector and_like(guard_rounding(std::move(w)));
  return or_like ? and_like.reversed() : and_like;
}

}  // namespace owa
