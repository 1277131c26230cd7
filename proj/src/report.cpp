#include "owa/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>
#include <tuple>
#include <unistd.h>

#include <json.hpp>

#include "owa/baselines.hpp"
#include "owa/core.hpp"
#include "owa/error.hpp"
#include "owa/linear.hpp"

namespace owa {

namespace {

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::linear, "linear"},
    {Method::exponential, "exponential"},
    {Method::exponential_no_preset, "exponential-no-preset"},
    {Method::maxent, "maxent"},
};

constexpr std::pair<Status, std::string_view> kStatusNames[] = {
    {Status::ok, "ok"},
    {Status::unstable, "unstable"},
    {Status::unsupported, "unsupported"},
    {Status::uncalibrated, "uncalibrated"},
};

MethodReport from_weights(MethodReport r, std::vector<double> w) {
  r.achieved_orness = orness_of(w);
  r.dispersion = dispersion_of(w);
  r.weights = std::move(w);
  return r;
}

std::vector<double> to_vector(const WeightVector& w) { return {w.begin(), w.end()}; }

}  // namespace

std::string_view to_string(Method m) {
  for (auto [k, v] : kMethodNames)
    if (k == m) return v;
  return "?";
}

std::string_view to_string(Status s) {
  for (auto [k, v] : kStatusNames)
    if (k == s) return v;
  return "?";
}

std::optional<Method> parse_method(std::string_view s) {
  for (auto [k, v] : kMethodNames)
    if (v == s) return k;
  return std::nullopt;
}

std::optional<Status> parse_status(std::string_view s) {
  for (auto [k, v] : kStatusNames)
    if (v == s) return k;
  return std::nullopt;
}

MethodReport evaluate(Method method, double orness, std::size_t n, std::optional<double> beta) {
  MethodReport r{method, std::nullopt, n, orness, std::nullopt, std::nullopt, {}, Status::ok, {}};
  switch (method) {
    case Method::linear: {
      r.beta = beta.value_or(OrnessTarget::kDefaultBeta);
      return from_weights(r, to_vector(linear_weights(OrnessTarget(orness, *r.beta), n)));
    }
    case Method::exponential: {
      try {
        return from_weights(r, to_vector(exponential_weights(orness, n).weights));
      } catch (const CalibrationError& e) {
        r.status = Status::unstable;
        r.message = e.what();
        return r;
      }
    }
    case Method::exponential_no_preset: {
      const double a = exponential_nopreset_parameter(orness);
      r.status = Status::uncalibrated;
      return from_weights(r, to_vector(exponential_raw(a, n, exponential_kind_for(orness))));
    }
    case Method::maxent: {
      try {
        return from_weights(r, to_vector(maxent_weights(orness, n)));
      } catch (const UnsupportedError& e) {
        r.status = Status::unsupported;
        r.message = e.what();
        return r;
      } catch (const NumericalInstabilityError& e) {
        r.status = Status::unstable;
        r.message = e.what();
        if (!e.raw_weights().empty()) r = from_weights(r, e.raw_weights());
        return r;
      }
    }
  }
  throw InternalError("unknown method");
}

std::vector<double> orness_grid(double lo, double hi, int steps) {
  if (steps < 2) throw DomainError("steps must be >= 2");
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) throw DomainError("orness range must lie in [0, 1]");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) grid[k] = lo + (hi - lo) * k / (steps - 1);
  grid.back() = hi;
  return grid;
}

SweepTable run_sweep(const SweepConfig& config) {
  if (config.methods.empty()) throw DomainError("sweep needs at least one method");
  const std::vector<double> grid = orness_grid(config.orness_min, config.orness_max, config.steps);

  SweepTable table;
  for (Method m : config.methods) {
    std::vector<std::optional<double>> betas{std::nullopt};
    if (m == Method::linear) betas.assign(config.betas.begin(), config.betas.end());
    for (const auto& beta : betas)
      for (double o : grid) table.rows.push_back(evaluate(m, o, config.n, beta));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const MethodReport& a, const MethodReport& b) {
                     return std::tuple(a.method, a.requested_orness, a.beta.value_or(0.0)) <
                            std::tuple(b.method, b.requested_orness, b.beta.value_or(0.0));
                   });
  return table;
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string to_csv(const SweepTable& table, std::string_view provenance) {
  std::size_t width = 0;
  for (const auto& r : table.rows) width = std::max(width, r.n);

  std::string out;
  out += "# ";
  out += provenance;
  out += '\n';
  out += "method,beta,n,requested_orness,achieved_orness,dispersion,status";
  for (std::size_t i = 1; i <= width; ++i) out += ",w" + std::to_string(i);
  out += '\n';

  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const auto& r : table.rows) {
    out += to_string(r.method);
    out += ',' + opt(r.beta);
    out += ',' + std::to_string(r.n);
    out += ',' + format_number(r.requested_orness);
    out += ',' + opt(r.achieved_orness);
    out += ',' + opt(r.dispersion);
    out += ',';
    out += to_string(r.status);
    for (std::size_t i = 0; i < width; ++i) {
      out += ',';
      if (i < r.weights.size()) out += format_number(r.weights[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw DomainError("malformed number in CSV: '" + std::string(s) + "'");
  return v;
}

std::optional<double> parse_optional(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

}  // namespace

SweepTable parse_csv(std::string_view text) {
  SweepTable table;
  bool header_seen = false;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (!line.starts_with("method,")) throw DomainError("CSV header missing");
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() < 7) throw DomainError("CSV row has too few fields");
    MethodReport r{};
    auto method = parse_method(f[0]);
    auto status = parse_status(f[6]);
    if (!method || !status) throw DomainError("CSV row has unknown method or status");
    r.method = *method;
    r.status = *status;
    r.beta = parse_optional(f[1]);
    r.n = static_cast<std::size_t>(parse_double(f[2]));
    r.requested_orness = parse_double(f[3]);
    r.achieved_orness = parse_optional(f[4]);
    r.dispersion = parse_optional(f[5]);
    for (std::size_t i = 7; i < f.size(); ++i)
      if (!f[i].empty()) r.weights.push_back(parse_double(f[i]));
    table.rows.push_back(std::move(r));
  }
  return table;
}

std::string to_json_line(const MethodReport& r) {
  nlohmann::json j;
  j["method"] = to_string(r.method);
  j["beta"] = r.beta ? nlohmann::json(*r.beta) : nlohmann::json(nullptr);
  j["n"] = r.n;
  j["requested_orness"] = r.requested_orness;
  j["achieved_orness"] = r.achieved_orness ? nlohmann::json(*r.achieved_orness) : nullptr;
  j["dispersion"] = r.dispersion ? nlohmann::json(*r.dispersion) : nullptr;
  j["status"] = to_string(r.status);
  j["w"] = r.weights;
  if (!r.message.empty()) j["message"] = r.message;
  return j.dump();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.flush();
    if (!os) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

namespace {

struct BenchCase {
  Method method;
  std::optional<double> beta;
};

// Generates one weight vector; failures count toward the timed cost.
double generate_once(const BenchCase& c, double o, std::size_t n) {
  try {
    switch (c.method) {
      case Method::linear:
        return linear_weights(OrnessTarget(o, *c.beta), n)[0];
      case Method::exponential:
        return exponential_weights(o, n).weights[0];
      case Method::exponential_no_preset:
        return exponential_raw(exponential_nopreset_parameter(o), n, exponential_kind_for(o))[0];
      case Method::maxent:
        return maxent_weights(o, n)[0];
    }
  } catch (const Error&) {
  }
  return 0.0;
}

}  // namespace

BenchReport run_bench(const std::vector<std::size_t>& n_list, int reps) {
  if (reps < 1) throw DomainError("reps must be >= 1");
  const std::vector<BenchCase> cases = {
      {Method::linear, 1.0},       {Method::linear, 1.25},
      {Method::linear, 1.5},       {Method::exponential, std::nullopt},
      {Method::exponential_no_preset, std::nullopt}, {Method::maxent, std::nullopt},
  };
  const std::vector<double> grid = orness_grid(0.0, 1.0, kBenchGridPoints);

  BenchReport report;
  volatile double sink = 0.0;
  for (std::size_t n : n_list) {
    if (n < 3) throw DomainError("bench needs n >= 3");
    const std::size_t first = report.entries.size();
    for (const auto& c : cases) {
      for (double o : grid) sink = sink + generate_once(c, o, n);  // warm-up
      double total = 0.0;
      for (int rep = 0; rep < reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        double acc = 0.0;
        for (double o : grid) acc += generate_once(c, o, n);
        const auto t1 = std::chrono::steady_clock::now();
        sink = sink + acc;
        total += std::chrono::duration<double>(t1 - t0).count();
      }
      report.entries.push_back({c.method, c.beta, n, reps, total / reps, 0.0});
    }
    double fastest = report.entries[first].mean_time;
    for (std::size_t i = first; i < report.entries.size(); ++i)
      fastest = std::min(fastest, report.entries[i].mean_time);
    for (std::size_t i = first; i < report.entries.size(); ++i)
      report.entries[i].relative_time = report.entries[i].mean_time / fastest;
  }
  return report;
}

}  // namespace owa
