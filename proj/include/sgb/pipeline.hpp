#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgb/bounds.hpp"
#include "sgb/confmap.hpp"
#include "sgb/constants.hpp"
#include "sgb/eigensolver.hpp"
#include "sgb/quasidisc.hpp"

namespace sgb::pipeline {

/// One named pass/fail comparison between a bound and the solver oracle.
struct SandwichFlag {
  std::string name;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Solver run attached to a report, with the derived sandwich flags.
/// Cusped boundaries get the conservative fine-grid value; the band is
/// the two-grid difference per mode.
struct SolverCheck {
  eigensolver::SolveResult result;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double band1 = 0.0;
  double band2 = 0.0;
  std::vector<SandwichFlag> flags;
  bool all_pass = false;
};

/// Everything computed for one domain family member at one alpha.
struct DomainReport {
  std::string family;  // "epicycloid" or "section4"
  int param = 0;       // n (epicycloid) or k (section4)
  double alpha = 0.0;  // inf allowed
  confmap::PolynomialConformalMap map;
  double area = 0.0;
  double rho = 0.0;          // epicycloid closed form
  double rho_numeric = 0.0;  // grid estimate, for cross-checking
  double perimeter = 0.0;
  double deriv_norm = 0.0;     // ||phi'||_alpha
  double deviation_l2 = 0.0;   // ||phi' - 1||_2
  double variation = 0.0;      // witness upper bound on V_alpha^0
  constants::Infimum gamma;    // gamma_alpha with optimizer argument
  // stability-based bounds (epicycloid only; requires area pi)
  std::optional<bounds::BoundReport> bound_report;
  // section-4 sandwich (section4 only)
  double t = 0.0;
  bool containment_certified = false;
  struct HighBound { int k; double lower; double upper; bool vacuous; };
  std::vector<HighBound> high_bounds;
  bounds::BoundValue high_ratio_12;
  std::optional<SolverCheck> solver;
};

DomainReport epicycloid_report(int n, double alpha,
                               const constants::DiscConstants& disc);
DomainReport section4_report(int k, double alpha,
                             const constants::DiscConstants& disc);

/// Run the finite-difference oracle on the report's domain at step h
/// (and h/2) and populate the sandwich flags.
void attach_solver(DomainReport& rep, double h,
                   const constants::DiscConstants& disc);

nlohmann::ordered_json report_to_json(const DomainReport& rep);
nlohmann::ordered_json constants_to_json(const std::vector<double>& alphas,
                                         const constants::DiscConstants& disc);
nlohmann::ordered_json quasidisc_to_json(const quasidisc::QuasidiscReport& rep);

/// gnuplot-ready CSV: header row then one row per report, ordered as given.
std::string sweep_csv(const std::vector<DomainReport>& reports);

/// Serialize alpha for reports ("inf" or the number).
std::string alpha_label(double alpha);

}  // namespace sgb::pipeline
