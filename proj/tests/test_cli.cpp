#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#ifndef SGB_CLI_PATH
#error "SGB_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SGB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("constants: gamma_inf below 1/5") {
  auto r = run("constants --alpha inf");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "sgb/1");
  CHECK(j["alphas"][0]["gamma_alpha"]["value"].get<double>() < 0.2);
}

TEST_CASE("constants: empty alpha list gives disc constants only") {
  auto r = run("constants");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["disc"]["lambda_star"]["value"].get<double>() ==
        doctest::Approx(2.539).epsilon(1e-3));
  CHECK(j["alphas"].empty());
}

TEST_CASE("determinism: identical invocations are byte-identical") {
  auto a = run("bounds --family epicycloid --n 6 --alpha 4");
  auto b = run("bounds --family epicycloid --n 6 --alpha 4");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("bounds --family epicycloid --n 1").exit_code == 2);
  CHECK(run("quasidisc --K 1").exit_code == 2);
  CHECK(run("constants --alpha 1.5").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("section4 bounds carry the scaling and containment certificate") {
  auto r = run("bounds --family section4 --k 3");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["t"]["value"].get<double>() == doctest::Approx(2.25).epsilon(1e-12));
  CHECK(j["containment_certified"].get<bool>());
  CHECK(j["high_eigenvalue_bounds"].size() == 4);
}

TEST_CASE("quasidisc report: finite log10 M, vacuous lower bounds") {
  auto r = run("quasidisc --K 1.05");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  double log10m = j["m_alpha_log10"]["log10_value"].get<double>();
  // exponential-term floor K^2 pi^2 (2+pi^2)^2 / (4 ln3 ln10) - 1
  double floor = 1.05 * 1.05 * M_PI * M_PI * (2 + M_PI * M_PI) * (2 + M_PI * M_PI) /
                     (4.0 * std::log(3.0) * std::log(10.0)) - 1.0;
  CHECK(log10m > floor);
  CHECK(j["lambda2_lower"]["vacuous"].get<bool>());
  // strict mode turns the all-vacuous report into exit 3
  CHECK(run("quasidisc --K 1.05 --strict").exit_code == 3);
}

TEST_CASE("sweep: csv is gnuplot-ready and consistent with bounds") {
  auto r = run("sweep --family epicycloid --min 5 --max 7 --format csv");
  REQUIRE(r.exit_code == 0);
  // header + 3 rows
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines + 1 >= 4);
  CHECK(r.out.rfind("param,alpha,variation,lambda1_upper", 0) == 0);

  // single-point sweep agrees with cmd_bounds
  auto sweep1 = run("sweep --family epicycloid --min 6 --max 6 --format json");
  auto bound1 = run("bounds --family epicycloid --n 6");
  REQUIRE(sweep1.exit_code == 0);
  REQUIRE(bound1.exit_code == 0);
  auto js = nlohmann::json::parse(sweep1.out);
  auto jb = nlohmann::json::parse(bound1.out);
  CHECK(js["points"][0]["bounds"] == jb["bounds"]);
}
