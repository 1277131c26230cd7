#include "owa/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "owa/error.hpp"

namespace owa {

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw DomainError("weight vector must have at least one element");
  double sum = 0.0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    const double wi = w_[i];
    if (!(wi >= 0.0 && wi <= 1.0)) {
      std::ostringstream msg;
      msg << "weight w" << (i + 1) << " = " << wi << " outside [0, 1]";
      throw DomainError(msg.str());
    }
    sum += wi;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "weights sum to " << sum << ", expected 1 within " << kWeightSumTolerance;
    throw DomainError(msg.str());
  }
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw DomainError("n must be >= 1");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

WeightVector WeightVector::minimum(std::size_t n) {
  if (n == 0) throw DomainError("n must be >= 1");
  std::vector<double> w(n, 0.0);
  w.back() = 1.0;
  return WeightVector(std::move(w));
}

WeightVector WeightVector::maximum(std::size_t n) {
  if (n == 0) throw DomainError("n must be >= 1");
  std::vector<double> w(n, 0.0);
  w.front() = 1.0;
  return WeightVector(std::move(w));
}

WeightVector WeightVector::reversed() const {
  WeightVector r = *this;
  std::reverse(r.w_.begin(), r.w_.end());
  return r;
}

OrnessTarget::OrnessTarget(double orness_, double beta_) : orness(orness_), beta(beta_) {
  if (!(orness >= 0.0 && orness <= 1.0)) {
    std::ostringstream msg;
    msg << "orness = " << orness << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  if (!(beta >= kMinBeta && beta <= kMaxBeta)) {
    std::ostringstream msg;
    msg << "beta = " << beta << " outside [" << kMinBeta << ", " << kMaxBeta << "]";
    throw DomainError(msg.str());
  }
}

double orness_of(std::span<const double> w) {
  const std::size_t n = w.size();
  if (n < 2) return 0.5;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += static_cast<double>(n - 1 - i) * w[i];
  return acc / static_cast<double>(n - 1);
}

OrnessMeasure orness(const WeightVector& w) {
  if (w.size() == 1) return {0.5, true};
  return {orness_of(w.values()), false};
}

double dispersion_of(std::span<const double> w) {
  double h = 0.0;
  for (double wi : w) {
    if (wi > 0.0) h -= wi * std::log(wi);
  }
  return h;
}

double dispersion(const WeightVector& w) { return dispersion_of(w.values()); }

double aggregate(const WeightVector& w, std::span<const double> x) {
  if (x.empty()) throw DomainError("input vector must be non-empty");
  if (x.size() != w.size()) throw DimensionError(w.size(), x.size());
  if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); }))
    throw DomainError("input vector contains a non-finite value");

  std::vector<double> sorted(x.begin(), x.end());
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
  const double y = std::inner_product(sorted.begin(), sorted.end(), w.begin(), 0.0);
  // rounding in the weight sum must not push the result past the extremes
  return std::clamp(y, sorted.back(), sorted.front());
}

}  // namespace owa
