#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgb/pipeline.hpp"

namespace {

// exit codes: 0 ok, 2 usage, 3 numeric infeasibility under --strict,
// 4 solver non-convergence
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitSolver = 4;

double parse_alpha(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF")
    return std::numeric_limits<double>::infinity();
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw CLI::ValidationError("alpha", "not a number or 'inf'");
  if (!(v > 2.0)) throw CLI::ValidationError("alpha", "requires alpha > 2");
  return v;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << payload << "\n";
  }
}

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral-gap bounds for conformally perturbed discs"};
  app.require_subcommand(1);
  app.fallthrough();  // --out/--format/--strict are shared by all subcommands

  std::string out_path;
  std::string format = "json";
  bool strict = false;
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--strict", strict,
               "exit 3 when every requested lower bound is vacuous");

  // constants
  auto* c_cmd = app.add_subcommand("constants", "disc spectrum and gamma_alpha");
  std::vector<std::string> alpha_args;
  c_cmd->add_option("--alpha", alpha_args, "alpha values (> 2 or 'inf'); may repeat");

  // bounds
  auto* b_cmd = app.add_subcommand("bounds", "eigenvalue bounds for one domain");
  b_cmd->set_help_flag("--help", "print help");  // frees -h for the grid step
  std::string family = "epicycloid";
  int n_param = 0, k_param = 0;
  std::string alpha_str = "inf";
  bool with_solver = false;
  double h = 0.01;
  b_cmd->add_option("--family", family, "epicycloid or section4")
      ->check(CLI::IsMember({"epicycloid", "section4"}));
  b_cmd->add_option("--n", n_param, "epicycloid parameter n >= 2");
  b_cmd->add_option("--k", k_param, "section4 parameter k >= 2");
  b_cmd->add_option("--alpha", alpha_str, "alpha (> 2 or 'inf')");
  b_cmd->add_flag("--with-solver", with_solver, "attach the FD oracle");
  b_cmd->add_option("--h", h, "oracle grid step")->check(CLI::PositiveNumber);

  // quasidisc
  auto* q_cmd = app.add_subcommand("quasidisc", "quasidisc eigenvalue-bound constants");
  double K = 0.0, q_area = 3.14159265358979323846;
  double rho = 1.0, deviation = 1.0;
  q_cmd->add_option("--K", K, "quasiconformality coefficient, K > 1")->required();
  q_cmd->add_option("--area", q_area, "domain area (must be pi)");
  q_cmd->add_option("--rho", rho, "inscribed radius");
  q_cmd->add_option("--deviation", deviation, "||phi' - 1||_2");

  // sweep
  auto* s_cmd = app.add_subcommand("sweep", "bounds across a parameter range");
  s_cmd->set_help_flag("--help", "print help");
  int n_min = 3, n_max = 10;
  std::string s_family = "epicycloid";
  std::string s_alpha_str = "inf";
  bool s_with_solver = false;
  double s_h = 0.02;
  s_cmd->add_option("--family", s_family, "epicycloid or section4")
      ->check(CLI::IsMember({"epicycloid", "section4"}));
  s_cmd->add_option("--min", n_min, "first parameter value");
  s_cmd->add_option("--max", n_max, "last parameter value");
  s_cmd->add_option("--alpha", s_alpha_str, "alpha (> 2 or 'inf')");
  s_cmd->add_flag("--with-solver", s_with_solver, "attach the FD oracle per point");
  s_cmd->add_option("--h", s_h, "oracle grid step")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto disc = sgb::constants::disc_spectrum(12);

    if (c_cmd->parsed()) {
      std::vector<double> alphas;
      for (const auto& a : alpha_args) alphas.push_back(parse_alpha(a));
      emit(sgb::pipeline::constants_to_json(alphas, disc).dump(2), out_path);
    } else if (b_cmd->parsed()) {
      double alpha = parse_alpha(alpha_str);
      sgb::pipeline::DomainReport rep;
      if (family == "epicycloid") {
        if (n_param < 2) throw CLI::ValidationError("--n", "requires n >= 2");
        rep = sgb::pipeline::epicycloid_report(n_param, alpha, disc);
      } else {
        if (k_param < 2) throw CLI::ValidationError("--k", "requires k >= 2");
        rep = sgb::pipeline::section4_report(k_param, alpha, disc);
      }
      if (with_solver) {
        try {
          sgb::pipeline::attach_solver(rep, h, disc);
        } catch (const std::runtime_error& e) {
          throw SolverError(e.what());
        }
      }
      if (strict) {
        bool any_valid = false;
        if (rep.bound_report)
          any_valid = !rep.bound_report->lambda2_lower.vacuous ||
                      !rep.bound_report->ratio_lower.vacuous ||
                      !rep.bound_report->gap_lower.vacuous;
        for (const auto& hb : rep.high_bounds) any_valid = any_valid || !hb.vacuous;
        if (!any_valid) {
          std::cerr << "strict: all requested lower bounds are vacuous\n";
          return kExitInfeasible;
        }
      }
      emit(sgb::pipeline::report_to_json(rep).dump(2), out_path);
    } else if (q_cmd->parsed()) {
      if (!(K > 1.0)) throw CLI::ValidationError("--K", "requires K > 1");
      auto rep = sgb::quasidisc::quasidisc_bounds(K, rho, deviation, q_area, disc);
      if (strict && rep.lambda2_lower.vacuous && rep.ratio_lower.vacuous) {
        std::cerr << "strict: all requested lower bounds are vacuous\n";
        return kExitInfeasible;
      }
      emit(sgb::pipeline::quasidisc_to_json(rep).dump(2), out_path);
    } else if (s_cmd->parsed()) {
      double alpha = parse_alpha(s_alpha_str);
      if (n_min < 2 || n_max < n_min)
        throw CLI::ValidationError("--min/--max", "requires 2 <= min <= max");
      std::vector<sgb::pipeline::DomainReport> reports;
      for (int p = n_min; p <= n_max; ++p) {
        auto rep = s_family == "epicycloid"
                       ? sgb::pipeline::epicycloid_report(p, alpha, disc)
                       : sgb::pipeline::section4_report(p, alpha, disc);
        if (s_with_solver) {
          try {
            sgb::pipeline::attach_solver(rep, s_h, disc);
          } catch (const std::runtime_error& e) {
            throw SolverError(e.what());
          }
        }
        reports.push_back(std::move(rep));
      }
      if (format == "csv") {
        std::string csv = sgb::pipeline::sweep_csv(reports);
        if (!csv.empty() && csv.back() == '\n') csv.pop_back();
        emit(csv, out_path);
      } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports)
          arr.push_back(sgb::pipeline::report_to_json(r));
        nlohmann::ordered_json j{{"schema", "sgb/1"}, {"points", arr}};
        emit(j.dump(2), out_path);
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  }

  const auto t1 = std::chrono::steady_clock::now();
  std::cerr << "elapsed_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << "\n";
  return kExitOk;
}
