#pragma once

#include <cstddef>

#include "owa/core.hpp"

// Slow independent reference computations for tests. Nothing here shares a
// code path with the closed forms it is meant to check.
namespace owa::oracle {

struct System2x2 {
  double a11, a12, a21, a22;
  double r1, r2;

  double determinant() const { return a11 * a22 - a12 * a21; }
};

struct LineSolution {
  double K;
  double b;
};

/// Cramer's rule. Throws InternalError when |det| < 1e-14.
LineSolution solve_cramer(const System2x2& s);

/// Builds the weight-sum and orness constraints on the line K*i + b from
/// explicit power sums and solves them.
System2x2 assemble_line_system(double alpha, std::size_t n, double beta);
LineSolution solve_system_oracle(double alpha, std::size_t n, double beta);

/// Highest-dispersion vector with the requested orness for n in [2, 5], found
/// by a grid over the interior weights followed by compass refinement.
WeightVector maxent_oracle(double orness, std::size_t n, int grid_steps);

}  // namespace owa::oracle
