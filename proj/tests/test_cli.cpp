// Integration tests driving the built CLI binary.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HSSYS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.out.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

const std::string kDegenerate =
    "--N 3 --s 1 --alpha 2 --beta 2 --lambda 2 --mu 2 --kappa 1";

}  // namespace

TEST_CASE("regime: degenerate family, inadmissible exit 2, semitrivial") {
  auto deg = run_cli("regime " + kDegenerate);
  CHECK(deg.exit_code == 0);
  auto j = nlohmann::json::parse(deg.out);
  CHECK(j["classification"] == "DegenerateFamily");

  auto bad = run_cli("regime --N 3 --s 1 --alpha 2 --beta 2 --lambda 2 --mu 2 --kappa -5");
  CHECK(bad.exit_code == 2);
  CHECK(nlohmann::json::parse(bad.out)["classification"] == "Inadmissible");

  auto semi = run_cli("regime --N 3 --s 1 --alpha 2 --beta 2 --lambda 2 --mu 2 --kappa -0.5");
  CHECK(semi.exit_code == 0);
  CHECK(nlohmann::json::parse(semi.out)["classification"] == "SemiTrivialOnly");
}

TEST_CASE("regime: precondition violation exits 1") {
  auto res = run_cli("regime --N 2 --s 1 --alpha 2 --beta 2 --lambda 1 --mu 1 --kappa 1");
  CHECK(res.exit_code == 1);
}

TEST_CASE("sharp-constant emits t0, g_min, mu_s, S, c0 with one code path for c0") {
  auto res = run_cli(
      "sharp-constant --N 3 --s 1 --alpha 2 --beta 2 --lambda 1 --mu 1 --kappa 1 "
      "--grid-points 1024");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["t0"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(j["g_min"].get<double>() == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-12));
  const double S = j["S"].get<double>();
  const double mu_s = j["mu_s"].get<double>();
  CHECK(S == doctest::Approx(j["g_min"].get<double>() * mu_s).epsilon(1e-14));
  CHECK(j["c0"].get<double>() == doctest::Approx(0.25 * S * S).epsilon(1e-12));
}

TEST_CASE("ground-state: file emission, gate on forbidden regimes, determinism") {
  const fs::path dir = fs::temp_directory_path() / "hssys_cli_test";
  fs::remove_all(dir);

  const std::string args =
      "ground-state " + kDegenerate + " --grid-points 512 --output-dir " + dir.string();
  auto res = run_cli(args);
  CHECK(res.exit_code == 0);
  auto checks = nlohmann::json::parse(res.out);
  CHECK(checks["all_pass"].get<bool>());
  CHECK(fs::exists(dir / "profile.csv"));
  CHECK(fs::exists(dir / "meta.json"));
  CHECK(fs::exists(dir / "checks.json"));

  // byte-identical rerun
  std::ifstream f1(dir / "profile.csv");
  std::stringstream s1;
  s1 << f1.rdbuf();
  auto res2 = run_cli(args);
  CHECK(res2.out == res.out);
  std::ifstream f2(dir / "profile.csv");
  std::stringstream s2;
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());

  auto forbidden = run_cli(
      "ground-state --N 3 --s 1 --alpha 2 --beta 2 --lambda 2 --mu 2 --kappa -0.5");
  CHECK(forbidden.exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("sweep: sharp_ratio non-increasing in kappa") {
  auto res = run_cli(
      "sweep --N 3 --s 1 --alpha 2 --beta 2 --lambda 1 --mu 1 --from 0.1 --to 2 "
      "--count 12");
  CHECK(res.exit_code == 0);
  std::istringstream is(res.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "kappa,classification,sharp_ratio,t0");
  double prev = 1e300;
  int rows = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    const double ratio = std::stod(line.substr(c2 + 1, c3 - c2 - 1));
    CHECK(ratio <= prev + 1e-12);
    prev = ratio;
    ++rows;
  }
  CHECK(rows == 12);
}

TEST_CASE("sweep with --jobs matches serial output") {
  const std::string base =
      "sweep --N 3 --s 1 --alpha 2 --beta 2 --lambda 1 --mu 1 --from 0.1 --to 2 --count 9";
  auto serial = run_cli(base);
  auto parallel = run_cli(base + " --jobs 3");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("fiber CSV sampler") {
  auto res = run_cli("fiber --N 3 --s 1 --alpha 2 --beta 2 --lambda 1 --mu 1 --kappa 1 "
                     "--t-min 0.1 --t-max 10 --count 8");
  CHECK(res.exit_code == 0);
  CHECK(res.out.rfind("t,g,h\n", 0) == 0);
}

TEST_CASE("cones subcommand validates, brackets and glues") {
  const fs::path table = fs::temp_directory_path() / "hssys_cones_table.csv";
  {
    std::ofstream os(table);
    os << "theta,S,provenance\n";
    os << "0.78539816339744828,10,user\n";
    os << "1.5707963267948966,5,user\n";
    os << "3.1415926535897931,3,rn\n";
  }
  auto res = run_cli("cones --table " + table.string() +
                     " --tau 4 --glue-k 3 --glue-N 3 --glue-two-star-s 4 --glue-S 1");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["violations"].empty());
  CHECK(j["bracket"]["theta_lo"].get<double>() == doctest::Approx(1.5707963267948966));
  CHECK(j["bracket"]["theta_hi"].get<double>() == doctest::Approx(3.1415926535897931));
  REQUIRE(j["gluing_energies"].size() == 3);
  CHECK(j["gluing_energies"][0].get<double>() == doctest::Approx(1.0));
  CHECK(j["gluing_energies"][1].get<double>() == doctest::Approx(4.0));
  fs::remove(table);
}

TEST_CASE("approx subcommand emits a monotone CSV") {
  auto res = run_cli(
      "approx --N 3 --s 1 --alpha 2 --beta 2 --lambda 2 --mu 2 --kappa 1 "
      "--r-min 1e-4 --r-max 1e4 --grid-points 512 --eps 0.1 --eps 0.2");
  CHECK(res.exit_code == 0);
  std::istringstream is(res.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "eps,S_eps");
  std::getline(is, line);
  const double s1 = std::stod(line.substr(line.find(',') + 1));
  std::getline(is, line);
  const double s2 = std::stod(line.substr(line.find(',') + 1));
  CHECK(s2 >= s1 * (1.0 - 1e-4));
}
