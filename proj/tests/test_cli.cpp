#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hflow/cli.hpp"

using namespace hflow;

namespace {

struct Run {
  int code;
  Json json;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hflow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  Json j = out.str().empty() || out.str().front() != '{' ? Json() : Json::parse(out.str());
  return {code, j, err.str()};
}

}  // namespace

TEST_CASE("classify exit codes") {
  Run a = run({"classify", "euler: theta"});
  CHECK(a.code == 0);
  CHECK(a.json["reason"] == "Euler1");
  CHECK(a.json["verdict"] == "Generates");

  Run b = run({"classify", "euler: i*theta^2"});
  CHECK(b.code == 10);
  CHECK(b.json["certificate"]["t0"].get<double>() == doctest::Approx(std::numbers::pi / 4));

  CHECK(run({"classify", "euler: -1*theta^2"}).code == 20);
  CHECK(exit_code_for(Verdict::Generates) == 0);
  CHECK(exit_code_for(Verdict::NotGenerates) == 10);
  CHECK(exit_code_for(Verdict::Unknown) == 20);
}

TEST_CASE("errors map to exit codes") {
  Run bad = run({"classify", "euler: theta +"});
  CHECK(bad.code == exit_code_for(ErrorKind::ParseError));
  CHECK(bad.code >= 64);
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"classify", "euler: theta + hardy: 1"}).code == exit_code_for(ErrorKind::VariantMismatch));
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"evolve", "euler: theta"}).code == 1);
}

TEST_CASE("evolve") {
  Run r = run({"--order", "12", "evolve", "euler: theta", "--t", "0.6931471805599453", "--input", "exp"});
  REQUIRE(r.code == 0);
  const Json& c = r.json["series"]["coeffs"];
  REQUIRE(c.size() == 13);
  for (std::size_t n = 0; n <= 12; ++n) {
    double expected = std::pow(2.0, double(n)) / std::tgamma(double(n) + 1);
    CHECK(c[n][0].get<double>() == doctest::Approx(expected).epsilon(1e-13));
  }

  Run zero = run({"--order", "6", "evolve", "hardy: 1/(n+1)", "--t", "0", "--input", "geom(0.5)"});
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(zero.json["series"]["coeffs"][n][0].get<double>() == std::pow(0.5, double(n)));

  CHECK(run({"--order", "6", "evolve", "hardy: 1/(n+1)", "--t", "-1"}).code == 0);
  CHECK(run({"evolve", "euler: i*theta^2", "--t", "-1"}).code ==
        exit_code_for(ErrorKind::NegativeTimeForSemigroupOnly));

  auto path = std::filesystem::temp_directory_path() / "hflow_cli_series.json";
  std::ofstream(path) << R"({"order": 2, "coeffs": [[1, 0], [0, 1], [2, 0]]})";
  Run file = run({"evolve", "euler: theta", "--t", "1", "--input", path.string()});
  REQUIRE(file.code == 0);
  CHECK(file.json["series"]["coeffs"][1][1].get<double>() == doctest::Approx(std::exp(1.0)));
  std::filesystem::remove(path);
}

TEST_CASE("poles") {
  Run a = run({"poles", "euler: theta", "--t", "0.5"});
  REQUIRE(a.code == 0);
  REQUIRE(a.json["poles"].size() == 1);
  CHECK(a.json["poles"][0]["re"].get<double>() == doctest::Approx(std::exp(-0.5)).epsilon(1e-8));
  CHECK(a.json["all_real"] == true);

  Run b = run({"poles", "euler: i*theta^2", "--t", "0.7853981633974483"});
  CHECK(b.json["all_real"] == false);

  Run c = run({"poles", "seq: [1, 1, 1, 1, 1, 1, 1, 1, 1]", "--t", "7"});
  REQUIRE(c.json["poles"].size() == 1);
  CHECK(c.json["poles"][0]["re"].get<double>() == doctest::Approx(1.0));

  Run d = run({"poles", "euler: theta^2", "--t", "1"});
  CHECK(d.json["radius"]["zero"] == true);
}

TEST_CASE("verify") {
  Run a = run({"verify", "euler: theta"});
  CHECK(a.code == 0);
  CHECK(a.json["all_pass"] == true);

  Run b = run({"verify", "euler: i*theta^2"});
  CHECK(b.code == 2);
  CHECK(b.json["checks"]["semigroup_law"]["status"] == "pass");
  CHECK(b.json["checks"]["poles"]["status"] == "fail");
  CHECK(b.json["checks"]["poles"]["obstruction_observed"] == true);
  CHECK(b.json["checks"]["poles"]["obstruction"]["kind"] == "RootOfUnityPole");

  Run c = run({"verify", "hardy: 1"});
  CHECK(c.code == 0);
  CHECK(c.json["checks"]["mellin_bound"]["status"] == "pass");
}

TEST_CASE("mellin and plot data") {
  auto path = std::filesystem::temp_directory_path() / "hflow_cli_plot.csv";
  Run m = run({"--emit-plot-data", path.string(), "mellin", "hardy: 1/(n+1)", "--t", "1", "--j", "1",
               "--a", "1", "--grid", "512"});
  REQUIRE(m.code == 0);
  CHECK(m.json["holds"] == true);
  CHECK(m.json["bound"].get<double>() == doctest::Approx(std::exp(3.0)));
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "re,im,weighted_abs");
  std::filesystem::remove(path);
  CHECK(run({"mellin", "euler: theta", "--t", "1", "--j", "1", "--a", "1"}).code ==
        exit_code_for(ErrorKind::VariantMismatch));
}

TEST_CASE("order from the environment") {
  setenv("HADAMARD_FLOW_ORDER", "5", 1);
  CHECK(RunConfig::from_environment().order == 5);
  Run r = run({"evolve", "euler: theta", "--t", "0"});
  CHECK(r.json["series"]["order"] == 5);
  Run flag = run({"--order", "3", "evolve", "euler: theta", "--t", "0"});
  CHECK(flag.json["series"]["order"] == 3);
  setenv("HADAMARD_FLOW_ORDER", "zero", 1);
  CHECK(run({"classify", "euler: theta"}).code == exit_code_for(ErrorKind::InvalidArgument));
  unsetenv("HADAMARD_FLOW_ORDER");
  CHECK(RunConfig::from_environment().order == kDefaultOrder);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"verify", "euler: theta"}).json == run({"verify", "euler: theta"}).json);
}
