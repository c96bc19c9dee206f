#pragma once

#include <limits>
#include <string>
#include <vector>

namespace sgb::constants {

inline constexpr double kAlphaInf = std::numeric_limits<double>::infinity();

/// Result of a 1-D infimum: value, minimizing p, and whether the minimum
/// was certified interior (opposite-sign one-sided differences) or sits
/// on the clamped interval edge.
struct Infimum {
  double value = 0.0;
  double p_star = 0.0;
  double log_value = 0.0;  // natural log of value
  bool interior = false;
};

/// Dirichlet spectrum of the unit disc.
struct DiscConstants {
  double lambda1 = 0.0;      // j_{0,1}^2
  double lambda2 = 0.0;      // j_{1,1}^2
  double lambda_star = 0.0;  // lambda2 / lambda1
  double j01 = 0.0;
  double j1_at_j01 = 0.0;    // J_1(j_{0,1})
  std::vector<double> spectrum;  // first N eigenvalues with multiplicity
};

/// Provenance record for a constant used in a bound.
struct ConstantTrace {
  std::string name;
  double value = 0.0;
  bool is_log10 = false;
  double optimizer_argument = std::numeric_limits<double>::quiet_NaN();
  std::string formula_id;
};

/// Planar Talenti constant A_{p,q}(R^2), q = 2p/(2-p), for p in (1,2).
double talenti_constant(double p);

/// Upper bound on the Poincare-Sobolev constant A_{r,2}(D), r >= 2,
/// as the infimum over p in (2r/(r+2), 2) of the Holder-reduced
/// Talenti objective.
Infimum poincare_constant_bound(double r);

/// Log of the Poincare objective at a given p (exposed for certificates
/// and cross-checks).
double poincare_objective_log(double p, double r);

/// gamma_alpha for alpha in (2, inf]; pass kAlphaInf for the
/// infinity-regular case (interval (4/3, 2), prefactor pi^{-1/2}).
Infimum gamma_alpha(double alpha);

/// Same infimum parametrized by s = alpha - 2; keeps precision when the
/// feasibility window is within floating-point granularity of alpha = 2.
/// Returns the natural-log infimum; u_star receives the minimizing
/// u = 2 - p.
Infimum gamma_alpha_from_s(double s);

/// Log of the gamma_alpha objective at u = 2 - p for alpha = 2 + s
/// (s = inf accepted).
double gamma_alpha_objective_log_u(double u, double s);

/// First `count` Dirichlet eigenvalues of the unit disc (squares of
/// Bessel zeros j_{m,l}, multiplicity 2 for m >= 1), count <= 50.
DiscConstants disc_spectrum(int count);

}  // namespace sgb::constants
