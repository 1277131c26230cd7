#include "owa/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "owa/error.hpp"

namespace owa {

namespace {

void check_orness(double orness) {
  if (!(orness >= 0.0 && orness <= 1.0)) {
    std::ostringstream msg;
    msg << "orness = " << orness << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

void check_n(std::size_t n) {
  if (n < 2) throw DomainError("n must be >= 2 (got " + std::to_string(n) + ")");
}

double or_like_orness(double a, std::size_t n) {
  return orness_of(exponential_raw(a, n, ExponentialKind::or_like).values());
}

}  // namespace

WeightVector exponential_raw(double a, std::size_t n, ExponentialKind kind) {
  if (!(a >= 0.0 && a <= 1.0)) {
    std::ostringstream msg;
    msg << "exponential parameter a = " << a << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  check_n(n);
  std::vector<double> w(n);
  for (std::size_t i = 1; i < n; ++i) w[i - 1] = a * std::pow(1.0 - a, static_cast<double>(i - 1));
  w[n - 1] = std::pow(1.0 - a, static_cast<double>(n - 1));
  if (kind == ExponentialKind::and_like) std::reverse(w.begin(), w.end());
  return WeightVector(std::move(w));
}

ExponentialKind exponential_kind_for(double orness) {
  return orness <= 0.5 ? ExponentialKind::and_like : ExponentialKind::or_like;
}

double exponential_nopreset_parameter(double orness) {
  check_orness(orness);
  return exponential_kind_for(orness) == ExponentialKind::or_like ? orness : 1.0 - orness;
}

ExponentialResult exponential_weights(double orness, std::size_t n) {
  check_orness(orness);
  check_n(n);
  const ExponentialKind kind = exponential_kind_for(orness);
  // The or-like orness is increasing in a; the and-like vector is its mirror,
  // so both kinds reduce to hitting `goal` on the or-like map.
  const double goal = kind == ExponentialKind::or_like ? orness : 1.0 - orness;

  double lo = 0.0;
  double hi = 1.0;
  double best = 0.0;
  double best_residual = std::abs(or_like_orness(lo, n) - goal);
  int iterations = 0;
  if (const double r = std::abs(or_like_orness(hi, n) - goal); r < best_residual) {
    best = hi;
    best_residual = r;
  }
  while (best_residual > 0.0 && hi - lo > kCalibrationParameterTolerance &&
         iterations < kCalibrationMaxIterations) {
    const double mid = 0.5 * (lo + hi);
    const double value = or_like_orness(mid, n);
    ++iterations;
    if (const double r = std::abs(value - goal); r < best_residual) {
      best = mid;
      best_residual = r;
    }
    if (value < goal)
      lo = mid;
    else
      hi = mid;
  }

  if (best_residual > kCalibrationOrnessTolerance)
    throw CalibrationError(best, best_residual, iterations);

  WeightVector w = exponential_raw(best, n, kind);
  const double achieved = orness_of(w.values());
  return {std::move(w), {best, achieved, iterations, true}};
}

namespace {

// Analytic maximum-entropy solution for an or-like request (alpha > 0.5,
// n >= 3). The first weight is the non-trivial root of
//   w1 [c + 1 - n w1]^n = c^(n-1) [(c - n) w1 + 1],  c = (n - 1) alpha,
// here divided through by c^n. w1 = 1/n is always a spurious root; the wanted
// one lies in (1/n, 1/(n - c)).
class FirstWeightEquation {
 public:
  FirstWeightEquation(double alpha, std::size_t n)
      : n_(static_cast<double>(n)), c_((n_ - 1.0) * alpha) {}

  double value(double w) const {
    const double t = (c_ + 1.0 - n_ * w) / c_;
    return w * std::pow(t, n_) - ((c_ - n_) * w + 1.0) / c_;
  }

  double derivative(double w) const {
    const double t = (c_ + 1.0 - n_ * w) / c_;
    return std::pow(t, n_) - w * n_ * (n_ / c_) * std::pow(t, n_ - 1.0) - (c_ - n_) / c_;
  }

  double lower() const { return 1.0 / n_; }
  double upper() const { return 1.0 / (n_ - c_); }

  double last_weight(double w1) const {
    return ((c_ - n_) * w1 + 1.0) / (c_ + 1.0 - n_ * w1);
  }

 private:
  double n_;
  double c_;
};

constexpr int kBracketScanPoints = 256;
constexpr int kRootMaxIterations = 200;

struct Bracket {
  double lo;
  double hi;
};

// Scans right of the spurious root for the first sign change.
std::optional<Bracket> bracket_root(const FirstWeightEquation& eq) {
  const double left = eq.lower();
  const double right = eq.upper();
  std::optional<double> last_negative;
  for (int k = 1; k <= kBracketScanPoints; ++k) {
    const double w = left + (right - left) * k / kBracketScanPoints;
    const double g = eq.value(w);
    if (g < 0.0) {
      last_negative = w;
    } else if (g > 0.0) {
      if (!last_negative) return std::nullopt;
      return Bracket{*last_negative, w};
    }
  }
  return std::nullopt;
}

// Newton steps kept inside the bracket, bisection otherwise.
double safeguarded_root(const FirstWeightEquation& eq, Bracket br) {
  double x = 0.5 * (br.lo + br.hi);
  for (int it = 0; it < kRootMaxIterations; ++it) {
    const double g = eq.value(x);
    if (g == 0.0) return x;
    if (g < 0.0)
      br.lo = x;
    else
      br.hi = x;
    if (br.hi - br.lo <= 4.0 * std::numeric_limits<double>::epsilon() * br.hi) break;

    const double dg = eq.derivative(x);
    double next = dg != 0.0 ? x - g / dg : br.lo - 1.0;
    if (!(next > br.lo && next < br.hi)) next = 0.5 * (br.lo + br.hi);
    if (next == x) break;
    x = next;
  }
  return x;
}

std::vector<double> geometric_fill(double w1, double wn, std::size_t n) {
  std::vector<double> w(n);
  const double l1 = std::log(w1);
  const double ln = std::log(wn);
  const double span = static_cast<double>(n - 1);
  for (std::size_t j = 1; j <= n; ++j) {
    w[j - 1] = std::exp((static_cast<double>(n - j) * l1 + static_cast<double>(j - 1) * ln) / span);
  }
  w.front() = w1;
  w.back() = wn;
  return w;
}

// Fallback: the optimum has w_i proportional to exp(lambda * (n - i) / (n - 1)),
// with orness increasing in lambda; bisect on lambda.
std::vector<double> dual_solve(double alpha, std::size_t n) {
  const double span = static_cast<double>(n - 1);
  auto build = [&](double lambda) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(n - 1 - i) / span;
      w[i] = std::exp(lambda * (t - 1.0));
      sum += w[i];
    }
    for (double& wi : w) wi /= sum;
    return w;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (orness_of(build(hi)) < alpha && hi < 1e6) hi *= 2.0;
  for (int it = 0; it < kRootMaxIterations && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (orness_of(build(mid)) < alpha)
      lo = mid;
    else
      hi = mid;
  }
  return build(0.5 * (lo + hi));
}

std::vector<double> solve_or_like(double alpha, std::size_t n) {
  const FirstWeightEquation eq(alpha, n);
  const std::optional<Bracket> br = bracket_root(eq);
  if (!br) return dual_solve(alpha, n);

  const double w1 = safeguarded_root(eq, *br);
  const double wn = eq.last_weight(w1);
  if (!(wn > 0.0) || !std::isfinite(wn)) {
    std::vector<double> raw(n, std::numeric_limits<double>::quiet_NaN());
    raw.front() = w1;
    raw.back() = wn;
    return raw;
  }
  return geometric_fill(w1, wn, n);
}

[[noreturn]] void unstable(double orness, std::size_t n, const std::string& detail,
                           double residual, std::vector<double> raw) {
  std::ostringstream msg;
  msg << "maximum-entropy solution numerically unstable near orness " << orness << " (n = " << n
      << "): " << detail;
  bool finite = std::all_of(raw.begin(), raw.end(), [](double v) { return std::isfinite(v); });
  if (!finite) raw.clear();
  throw NumericalInstabilityError(msg.str(), orness, residual, std::move(raw));
}

}  // namespace

WeightVector maxent_weights(double orness, std::size_t n) {
  check_orness(orness);
  check_n(n);
  if (orness == 0.0 || orness == 1.0) {
    std::ostringstream msg;
    msg << "maximum-entropy weights are undefined at orness " << orness
        << ": the objective requires every weight > 0, which excludes the minimum and "
           "maximum operators";
    throw UnsupportedError(msg.str());
  }
  if (n == 2) return WeightVector({orness, 1.0 - orness});
  if (orness == 0.5) return WeightVector::uniform(n);

  const bool or_like = orness > 0.5;
  std::vector<double> raw = solve_or_like(or_like ? orness : 1.0 - orness, n);
  if (!or_like) std::reverse(raw.begin(), raw.end());

  double sum = 0.0;
  for (double wi : raw) {
    if (!std::isfinite(wi) || wi < 0.0 || wi > 1.0)
      unstable(orness, n, "weights outside [0, 1]", std::numeric_limits<double>::infinity(),
               std::move(raw));
    sum += wi;
  }
  if (std::abs(sum - 1.0) > kMaxentSumTolerance) {
    std::ostringstream d;
    d << "weights sum to " << sum;
    unstable(orness, n, d.str(), std::abs(sum - 1.0), std::move(raw));
  }
  std::vector<double> w = raw;
  for (double& wi : w) wi /= sum;
  const double residual = std::abs(orness_of(w) - orness);
  if (residual > kMaxentOrnessTolerance) {
    std::ostringstream d;
    d << "orness residual " << residual;
    unstable(orness, n, d.str(), residual, std::move(raw));
  }
  return WeightVector(std::move(w));
}

}  // namespace owa
