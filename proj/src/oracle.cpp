#include "owa/oracle.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "owa/error.hpp"

namespace owa::oracle {

LineSolution solve_cramer(const System2x2& s) {
  const double det = s.determinant();
  if (std::abs(det) < 1e-14) {
    std::ostringstream msg;
    msg << "singular 2x2 system (det = " << det << ")";
    throw InternalError(msg.str());
  }
  return {(s.r1 * s.a22 - s.a12 * s.r2) / det, (s.a11 * s.r2 - s.r1 * s.a21) / det};
}

System2x2 assemble_line_system(double alpha, std::size_t n, double beta) {
  if (n < 3) throw DomainError("oracle system needs n >= 3");
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw DomainError("oracle alpha outside [0, 0.5]");

  const std::size_t m = n - 1;
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);

  // Power sums by explicit summation.
  double sum_i = 0.0;
  double sum_i2 = 0.0;
  double sum_n_minus_i = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    const double id = static_cast<double>(i);
    sum_i += id;
    sum_i2 += id * id;
    sum_n_minus_i += nd - id;
  }

  const double f = 1.0 - std::pow(1.0 - 2.0 * alpha, beta);
  const double mass = f * md / nd;

  // sum_i (K i + b) = mass
  // (1/m) sum_i (n - i)(K i + b) = alpha
  System2x2 s{};
  s.a11 = sum_i;
  s.a12 = md;
  s.r1 = mass;
  s.a21 = (nd * sum_i - sum_i2) / md;
  s.a22 = sum_n_minus_i / md;
  s.r2 = alpha;
  return s;
}

LineSolution solve_system_oracle(double alpha, std::size_t n, double beta) {
  return solve_cramer(assemble_line_system(alpha, n, beta));
}

namespace {

// Interior weights w_2..w_{n-1} are free; w_1 and w_n follow from the weight
// sum and orness constraints. Returns false when the completion is infeasible.
bool complete(const std::vector<double>& interior, double orness, std::size_t n,
              std::vector<double>& out) {
  const double span = static_cast<double>(n - 1);
  double sum = 0.0;
  double partial_orness = 0.0;
  for (std::size_t k = 0; k < interior.size(); ++k) {
    const std::size_t i = k + 2;
    sum += interior[k];
    partial_orness += static_cast<double>(n - i) / span * interior[k];
  }
  const double first = orness - partial_orness;
  const double last = 1.0 - sum - first;
  if (first < 0.0 || last < 0.0) return false;
  out.assign(n, 0.0);
  out.front() = first;
  for (std::size_t k = 0; k < interior.size(); ++k) out[k + 1] = interior[k];
  out.back() = last;
  return true;
}

double entropy(const std::vector<double>& w) {
  double h = 0.0;
  for (double v : w)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

}  // namespace

WeightVector maxent_oracle(double orness, std::size_t n, int grid_steps) {
  if (n < 2 || n > 5) throw DomainError("maxent_oracle supports n in [2, 5]");
  if (!(orness > 0.0 && orness < 1.0)) throw DomainError("maxent_oracle needs orness in (0, 1)");
  if (grid_steps < 100) throw DomainError("maxent_oracle needs grid_steps >= 100");

  const std::size_t dims = n - 2;
  std::vector<double> interior(dims, 0.0);
  std::vector<double> candidate;
  std::vector<double> best;
  double best_h = -1.0;
  std::vector<double> best_interior;

  // Odometer over the grid, fixed order; ties keep the first point found.
  std::vector<int> idx(dims, 0);
  const double step = 1.0 / grid_steps;
  while (true) {
    for (std::size_t d = 0; d < dims; ++d) interior[d] = idx[d] * step;
    if (complete(interior, orness, n, candidate)) {
      const double h = entropy(candidate);
      if (h > best_h) {
        best_h = h;
        best = candidate;
        best_interior = interior;
      }
    }
    std::size_t d = 0;
    while (d < dims && ++idx[d] > grid_steps) idx[d++] = 0;
    if (d == dims) break;
  }
  if (best.empty()) throw InternalError("maxent_oracle found no feasible grid point");

  // Compass search from the best grid point.
  interior = best_interior;
  for (double h_step = step; h_step > 1e-12; h_step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t d = 0; d < dims; ++d) {
        for (double sign : {1.0, -1.0}) {
          std::vector<double> trial = interior;
          trial[d] += sign * h_step;
          if (trial[d] < 0.0) continue;
          if (!complete(trial, orness, n, candidate)) continue;
          const double h = entropy(candidate);
          if (h > best_h) {
            best_h = h;
            best = candidate;
            interior = trial;
            improved = true;
          }
        }
      }
    }
  }

  double sum = 0.0;
  for (double v : best) sum += v;
  for (double& v : best) v /= sum;
  return WeightVector(std::move(best));
}

}  // namespace owa::oracle
