#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "owa/cli.hpp"
#include "owa/report.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = owa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen linear at the simple average") {
  const auto r = run({"gen", "--n", "5", "--orness", "0.5", "--method", "linear"});
  CHECK(r.code == 0);
  CHECK(r.out.find("weights: 0.20000000000000001 0.20000000000000001") != std::string::npos);
  CHECK(r.out.find("achieved_orness: 0.5") != std::string::npos);
  CHECK(r.out.find("dispersion: 1.6094379124341") != std::string::npos);
}

TEST_CASE("gen csv output parses back to the golden vector") {
  const auto r = run({"gen", "--n", "5", "--orness", "0.6", "--method", "linear", "--beta", "1.5",
                      "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto table = owa::parse_csv(r.out);
  REQUIRE(table.rows.size() == 1);
  const double expected[] = {0.27155414, 0.24844584, 0.20422292, 0.16, 0.11577708};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(table.rows[0].weights[i] - expected[i]) < 1e-6);
}

TEST_CASE("gen json") {
  const auto r = run({"gen", "--n", "4", "--orness", "0.3", "--method", "all", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  CHECK(r.out.find("\"method\":\"exponential-no-preset\"") != std::string::npos);
}

TEST_CASE("gen maxent at the maximum operator exits 3") {
  const auto r = run({"gen", "--n", "5", "--orness", "1.0", "--method", "maxent"});
  CHECK(r.code == owa::cli::kExitMethodDomain);
  CHECK(r.err.find("undefined at orness 1") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"gen", "--n", "5"}).code == 2);
  CHECK(run({"gen", "--n", "5", "--orness", "1.5"}).code == 2);
  CHECK(run({"gen", "--n", "5", "--orness", "0.5", "--method", "cubic"}).code == 2);
  CHECK(run({"gen", "--n", "5", "--orness", "0.5", "--beta", "2"}).code == 2);
  CHECK(run({"gen", "--n", "1", "--orness", "0.5", "--method", "maxent"}).code == 2);
  CHECK(run({"sweep", "--n", "5", "--steps", "1"}).code == 2);
  CHECK(run({"sweep", "--n", "5", "--orness-min", "0.8", "--orness-max", "0.2"}).code == 2);
  CHECK(run({"bench", "--n", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sweep writes CSV and is deterministic") {
  const auto dir = std::filesystem::temp_directory_path() / "owa_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.csv";
  std::vector<std::string> args{"sweep", "--n", "5", "--method", "all", "--beta", "1.0,1.25,1.5",
                                "--steps", "21", "--out"};
  auto args_a = args;
  args_a.push_back(a.string());
  REQUIRE(run(args_a).code == 0);
  const std::string first = slurp(a);
  REQUIRE(run(args_a).code == 0);
  CHECK(slurp(a) == first);
  CHECK(first.rfind("# owa-weights", 0) == 0);

  const auto table = owa::parse_csv(first);
  CHECK(table.rows.size() == 21 * 6);
  CHECK(owa::to_csv(table, first.substr(2, first.find('\n') - 2)) == first);
}

TEST_CASE("sweep to an unwritable path exits 4") {
  const auto r = run({"sweep", "--n", "5", "--out", "/nonexistent-dir/x/y.csv"});
  CHECK(r.code == owa::cli::kExitIo);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("bench smoke") {
  const auto r = run({"bench", "--n", "3", "--reps", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("method,beta,n,reps,mean_time,relative_time\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
}
