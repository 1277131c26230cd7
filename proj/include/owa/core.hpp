#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace owa {

/// Absolute tolerance on the sum of a weight vector.
inline constexpr double kWeightSumTolerance = 1e-12;

/// Ordered OWA weights. Index 0 multiplies the largest input.
///
/// Construction validates every weight against [0, 1] and the sum against
/// 1 within kWeightSumTolerance; a constructed WeightVector is always valid.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);

  static WeightVector uniform(std::size_t n);
  /// The minimum operator: all mass on the last (smallest) position.
  static WeightVector minimum(std::size_t n);
  /// The maximum operator: all mass on the first (largest) position.
  static WeightVector maximum(std::size_t n);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  std::span<const double> values() const { return w_; }
  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }

  WeightVector reversed() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> w_;
};

/// Desired orness together with the shape exponent of the linear family.
struct OrnessTarget {
  static constexpr double kDefaultBeta = 1.5;
  static constexpr double kMinBeta = 1.0;
  static constexpr double kMaxBeta = 1.5;

  explicit OrnessTarget(double orness, double beta = kDefaultBeta);

  double orness;
  double beta;
};

struct OrnessMeasure {
  double value;
  /// Set for n = 1, where the value is the 0.5 convention.
  bool degenerate;
};

OrnessMeasure orness(const WeightVector& w);

/// Unvalidated form used on intermediate (possibly invalid) vectors.
double orness_of(std::span<const double> w);

/// -sum w ln w with 0 ln 0 = 0.
double dispersion(const WeightVector& w);
double dispersion_of(std::span<const double> w);

/// Weighted sum of x sorted descending. Throws DimensionError on a length
/// mismatch and DomainError for empty or non-finite input.
double aggregate(const WeightVector& w, std::span<const double> x);

}  // namespace owa
