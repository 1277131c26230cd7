#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace owa {

enum class Method { linear, exponential, exponential_no_preset, maxent };

/// ok: weights valid and on target. unstable: the solver broke down.
/// unsupported: the method cannot represent the request. uncalibrated: the
/// no-preset exponential, whose orness is not steered to the request.
enum class Status { ok, unstable, unsupported, uncalibrated };

std::string_view to_string(Method m);
std::string_view to_string(Status s);
std::optional<Method> parse_method(std::string_view s);
std::optional<Status> parse_status(std::string_view s);

/// Outcome of one method at one (n, orness). achieved_orness, dispersion and
/// weights are absent when nothing usable was produced.
struct MethodReport {
  Method method;
  std::optional<double> beta;
  std::size_t n;
  double requested_orness;
  std::optional<double> achieved_orness;
  std::optional<double> dispersion;
  std::vector<double> weights;
  Status status;
  std::string message;

  friend bool operator==(const MethodReport&, const MethodReport&) = default;
};

/// Runs a single method; never throws for method-level failures, which are
/// reported through status and message instead.
MethodReport evaluate(Method method, double orness, std::size_t n,
                      std::optional<double> beta = std::nullopt);

struct SweepConfig {
  std::size_t n = 5;
  std::vector<Method> methods;
  std::vector<double> betas{1.5};
  int steps = 101;
  double orness_min = 0.0;
  double orness_max = 1.0;
};

struct SweepTable {
  std::vector<MethodReport> rows;
};

/// Evenly spaced grid with `steps` points from lo to hi inclusive.
std::vector<double> orness_grid(double lo, double hi, int steps);

/// Rows are ordered by (method, requested orness, beta).
SweepTable run_sweep(const SweepConfig& config);

/// One `#` provenance line, one header line, then rows. Numbers carry 17
/// significant digits; absent values are empty fields.
std::string to_csv(const SweepTable& table, std::string_view provenance);
SweepTable parse_csv(std::string_view text);

std::string to_json_line(const MethodReport& r);
std::string format_number(double v);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

struct BenchEntry {
  Method method;
  std::optional<double> beta;
  std::size_t n;
  int reps;
  double mean_time;
  double relative_time;
};

struct BenchReport {
  std::vector<BenchEntry> entries;
};

inline constexpr int kBenchGridPoints = 101;

/// Times each method over `reps` passes of the 101-point orness grid and
/// normalizes mean times per n to the fastest method.
BenchReport run_bench(const std::vector<std::size_t>& n_list, int reps);

}  // namespace owa
