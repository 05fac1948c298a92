#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

std::string cli() {
  const char* p = std::getenv("ELLSURF_CLI");
  REQUIRE(p != nullptr);
  return p;
}

Run run(const std::string& args) {
  const std::string file = "cli_test_output.json";
  const std::string cmd = cli() + " " + args + " > " + file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(file.c_str());
  return {WEXITSTATUS(status), ss.str()};
}

}  // namespace

TEST_CASE("dim example") {
  const auto r = run("dim --m 0 --d1 0,0 --d2 2,3 --rho generic");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("dim") == 12);
  CHECK(j.at("command") == "dim");
  CHECK(j.at("trace").is_array());
}

TEST_CASE("dim with a parameter map file") {
  {
    std::ofstream f("cli_test_rho.txt");
    f << "# s then f\n0 1 1 0\n0 0 1 0\n";
  }
  const auto r = run("dim --m 0 --d1 0,0 --d2 2,0 --rho cli_test_rho.txt");
  std::remove("cli_test_rho.txt");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("dim") == 4);
}

TEST_CASE("suite runs are deterministic") {
  const auto a = run("verify --suite flat-even --seed 7");
  const auto b = run("verify --suite flat-even --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("seed") == 7);
  CHECK(j.at("wall_time_ms") == 0);
  CHECK(j.at("suite") == "flat-even");
}

TEST_CASE("exit codes") {
  CHECK(run("verify --suite flat-even --no-such-flag").code == 2);
  CHECK(run("verify --suite no-such-suite").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("dim --m 0 --d1 0 --d2 2,3").code == 2);
  // the central suite compares against the q^-1 eta normalization and fails
  CHECK(run("verify --suite central --seed 1").code == 1);
}

TEST_CASE("config file with flag override") {
  {
    std::ofstream f("cli_test.cfg");
    f << "suite = k0\nseed = 9\n";
  }
  const auto a = nlohmann::json::parse(run("--config cli_test.cfg verify").out);
  const auto b = nlohmann::json::parse(run("--config cli_test.cfg verify --seed 4").out);
  std::remove("cli_test.cfg");
  CHECK(a.at("suite") == "k0");
  CHECK(a.at("seed") == 9);
  CHECK(b.at("seed") == 4);
}

TEST_CASE("eval prints a complex value") {
  const auto r = run("eval --fn theta --p 0.2+0.1i --z 0.7-0.3i");
  CHECK(r.code == 0);
  const auto v = nlohmann::json::parse(r.out).at("value");
  CHECK(v.at("re").get<double>() == doctest::Approx(0.26145948303594263).epsilon(1e-12));
  CHECK(v.at("im").get<double>() == doctest::Approx(0.10826864218213328).epsilon(1e-12));
  CHECK(run("eval --fn theta --p 1.5 --z 0.7").code == 2);
}

TEST_CASE("dynamics and coweight commands") {
  const auto d = nlohmann::json::parse(run("dynamics --word 1,2 --report degree").out);
  CHECK(d.at("degree") == 9);
  {
    std::ofstream f("cli_test_matrix.json");
    f << R"({"rows": [[{"low": 2, "coeffs": [1]}, {"low": 0, "coeffs": [0]}],
                     [{"low": 0, "coeffs": [0]}, {"low": 1, "coeffs": [1]}]]})";
  }
  const auto c = run("coweight --matrix cli_test_matrix.json");
  std::remove("cli_test_matrix.json");
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out).at("coweight") == nlohmann::json::array({2, 1}));
}
