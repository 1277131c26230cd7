#include "owa/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "owa/error.hpp"
#include "owa/report.hpp"

namespace owa::cli {

namespace {

constexpr std::string_view kVersion = "1.0.0";

const std::map<std::string, std::string> kMethodFlag = {
    {"linear", "linear"},
    {"exp", "exponential"},
    {"exp-nopreset", "exponential-no-preset"},
    {"maxent", "maxent"},
    {"all", "all"},
};

std::vector<Method> resolve_methods(const std::vector<std::string>& flags) {
  std::vector<Method> out;
  auto add = [&out](Method m) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  for (const auto& f : flags) {
    const std::string& name = kMethodFlag.at(f);
    if (name == "all") {
      for (Method m : {Method::linear, Method::exponential, Method::exponential_no_preset,
                       Method::maxent})
        add(m);
    } else {
      add(*parse_method(name));
    }
  }
  return out;
}

std::string provenance(const std::vector<std::string>& args) {
  std::string p = "owa-weights " + std::string(kVersion);
  for (const auto& a : args) p += " " + a;
  return p;
}

bool is_error(Status s) { return s == Status::unstable || s == Status::unsupported; }

void print_plain(std::ostream& out, const MethodReport& r) {
  out << "method: " << to_string(r.method) << '\n';
  if (r.beta) out << "beta: " << format_number(*r.beta) << '\n';
  out << "n: " << r.n << '\n';
  out << "requested_orness: " << format_number(r.requested_orness) << '\n';
  if (r.achieved_orness) out << "achieved_orness: " << format_number(*r.achieved_orness) << '\n';
  if (r.dispersion) out << "dispersion: " << format_number(*r.dispersion) << '\n';
  out << "status: " << to_string(r.status) << '\n';
  if (!r.weights.empty()) {
    out << "weights:";
    for (double w : r.weights) out << ' ' << format_number(w);
    out << '\n';
  }
}

void emit(std::ostream& out, const std::string& format, const SweepTable& table,
          const std::string& prov) {
  if (format == "csv") {
    out << to_csv(table, prov);
  } else if (format == "json") {
    for (const auto& r : table.rows) out << to_json_line(r) << '\n';
  } else {
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      if (i) out << '\n';
      print_plain(out, table.rows[i]);
    }
  }
}

void print_bench(std::ostream& out, const std::string& format, const BenchReport& report) {
  if (format == "json") {
    for (const auto& e : report.entries) {
      nlohmann::json j;
      j["method"] = to_string(e.method);
      j["beta"] = e.beta ? nlohmann::json(*e.beta) : nlohmann::json(nullptr);
      j["n"] = e.n;
      j["reps"] = e.reps;
      j["mean_time"] = e.mean_time;
      j["relative_time"] = e.relative_time;
      out << j.dump() << '\n';
    }
    return;
  }
  if (format == "csv") {
    out << "method,beta,n,reps,mean_time,relative_time\n";
    for (const auto& e : report.entries) {
      out << to_string(e.method) << ',' << (e.beta ? format_number(*e.beta) : "") << ',' << e.n
          << ',' << e.reps << ',' << format_number(e.mean_time) << ','
          << format_number(e.relative_time) << '\n';
    }
    return;
  }
  out << std::left << std::setw(24) << "method" << std::setw(7) << "beta" << std::setw(7) << "n"
      << std::setw(7) << "reps" << std::setw(16) << "mean_time_s" << "relative\n";
  for (const auto& e : report.entries) {
    std::ostringstream beta;
    if (e.beta) beta << *e.beta;
    std::ostringstream mean;
    mean << std::scientific << std::setprecision(3) << e.mean_time;
    std::ostringstream rel;
    rel << std::fixed << std::setprecision(2) << e.relative_time;
    out << std::left << std::setw(24) << to_string(e.method) << std::setw(7) << beta.str()
        << std::setw(7) << e.n << std::setw(7) << e.reps << std::setw(16) << mean.str()
        << rel.str() << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight vectors for OWA operators with a desired orness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  const auto method_check = CLI::IsMember(kMethodFlag);
  const auto format_check = CLI::IsMember({"csv", "json", "plain"});

  std::size_t gen_n = 5;
  double gen_orness = 0.5;
  std::string gen_method = "linear";
  double gen_beta = 1.5;
  std::string gen_format = "plain";
  auto* gen = app.add_subcommand("gen", "Compute the weights for one orness");
  gen->add_option("--n", gen_n, "Number of inputs")->required()->check(CLI::PositiveNumber);
  gen->add_option("--orness", gen_orness, "Desired orness")->required()->check(CLI::Range(0.0, 1.0));
  gen->add_option("--method", gen_method, "linear|exp|exp-nopreset|maxent|all")
      ->check(method_check);
  gen->add_option("--beta", gen_beta, "Shape exponent of the linear method")
      ->check(CLI::Range(1.0, 1.5));
  gen->add_option("--format", gen_format, "csv|json|plain")->check(format_check);

  SweepConfig sweep_cfg;
  std::vector<std::string> sweep_methods{"linear"};
  std::string sweep_out;
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Evaluate methods over an orness grid");
  sweep->add_option("--n", sweep_cfg.n, "Number of inputs")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--method", sweep_methods, "Comma-separated methods")
      ->delimiter(',')
      ->check(method_check);
  sweep->add_option("--beta", sweep_cfg.betas, "Comma-separated betas for the linear method")
      ->delimiter(',')
      ->check(CLI::Range(1.0, 1.5));
  sweep->add_option("--steps", sweep_cfg.steps, "Grid points")->check(CLI::Range(2, 1000000));
  sweep->add_option("--orness-min", sweep_cfg.orness_min, "Grid start")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--orness-max", sweep_cfg.orness_max, "Grid end")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--out", sweep_out, "Output path (stdout when omitted)");
  sweep->add_option("--format", sweep_format, "csv|json|plain")->check(format_check);

  std::vector<std::size_t> bench_n{10, 100};
  int bench_reps = 20;
  std::string bench_format = "plain";
  auto* bench = app.add_subcommand("bench", "Time the methods and report relative costs");
  bench->add_option("--n", bench_n, "Comma-separated sizes")->delimiter(',')->check(CLI::Range(3, 1000000));
  bench->add_option("--reps", bench_reps, "Repetitions per method")->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_format, "csv|json|plain")->check(format_check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      SweepTable table;
      for (Method m : resolve_methods({gen_method}))
        table.rows.push_back(evaluate(m, gen_orness, gen_n, gen_beta));
      emit(out, gen_format, table, provenance(args));
      int code = kExitOk;
      for (const auto& r : table.rows) {
        if (is_error(r.status)) {
          err << "error: " << to_string(r.method) << ": " << r.message << '\n';
          code = kExitMethodDomain;
        }
      }
      return code;
    }
    if (*sweep) {
      if (sweep_cfg.orness_min > sweep_cfg.orness_max) {
        err << "error: --orness-min must not exceed --orness-max\n";
        return kExitUsage;
      }
      sweep_cfg.methods = resolve_methods(sweep_methods);
      const SweepTable table = run_sweep(sweep_cfg);
      if (sweep_out.empty()) {
        emit(out, sweep_format, table, provenance(args));
      } else {
        std::ostringstream buf;
        emit(buf, sweep_format, table, provenance(args));
        write_file_atomic(sweep_out, buf.str());
      }
      return kExitOk;
    }
    if (*bench) {
      print_bench(out, bench_format, run_bench(bench_n, bench_reps));
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitMethodDomain;
  }
  return kExitFailure;
}

}  // namespace owa::cli
