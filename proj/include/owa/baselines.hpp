#pragma once

#include <cstddef>

#include "owa/core.hpp"

namespace owa {

enum class ExponentialKind { and_like, or_like };

/// Geometric weights a(1-a)^(i-1), last weight (1-a)^(n-1); the and-like kind
/// is the reverse of the or-like vector for the same a.
WeightVector exponential_raw(double a, std::size_t n, ExponentialKind kind);

/// Parameter used when the exponential family is run without preset:
/// a = orness for or-like requests, a = 1 - orness for and-like ones.
double exponential_nopreset_parameter(double orness);
ExponentialKind exponential_kind_for(double orness);

struct CalibrationResult {
  double parameter;
  double achieved_orness;
  int iterations;
  bool converged;
};

struct ExponentialResult {
  WeightVector weights;
  CalibrationResult calibration;
};

inline constexpr int kCalibrationMaxIterations = 200;
inline constexpr double kCalibrationParameterTolerance = 1e-12;
inline constexpr double kCalibrationOrnessTolerance = 1e-9;

/// Exponential weights with the parameter preset by bisection so that the
/// achieved orness matches. Throws CalibrationError when the cap is hit
/// without reaching kCalibrationOrnessTolerance.
ExponentialResult exponential_weights(double orness, std::size_t n);

/// Orness residual above which a maximum-entropy solution is rejected as
/// unstable. The dispersion error grows like ln(w1/wn) times this residual,
/// so it is kept well below the 1e-9 accuracy promised for dispersion.
inline constexpr double kMaxentOrnessTolerance = 1e-12;
inline constexpr double kMaxentSumTolerance = 1e-6;

/// Maximum-dispersion weights for the given orness.
///
/// Solves the single-variable polynomial equation for the first weight and
/// fills the geometric interior. Throws UnsupportedError for orness 0 or 1
/// and NumericalInstabilityError when the solution cannot be trusted, which
/// happens for large n as orness approaches either end.
WeightVector maxent_weights(double orness, std::size_t n);

}  // namespace owa
