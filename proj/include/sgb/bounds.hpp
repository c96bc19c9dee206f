#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sgb/constants.hpp"

namespace sgb::bounds {

using constants::ConstantTrace;
using constants::DiscConstants;

/// Everything the bound formulas consume. The domain is normalized to
/// area pi; rho is the inscribed radius, variation an upper bound on
/// V_alpha^0(D, Omega).
struct BoundInputs {
  double rho = 1.0;
  double alpha = 0.0;  // inf allowed
  double variation = 0.0;
  double gamma_alpha_value = 0.0;
  double area = 0.0;
  std::optional<double> perimeter;
};

/// A lower bound together with its vacuousness flag (value <= 0 is
/// reported, not clamped).
struct BoundValue {
  double value = 0.0;
  bool vacuous = false;
};

struct BoundReport {
  double lambda1_upper = 0.0;
  BoundValue lambda2_lower;
  BoundValue ratio_lower;
  BoundValue gap_lower;
  std::map<int, double> stability_radius_k;
  std::optional<double> pw_upper;
  double fk_lower = 0.0;
  std::vector<ConstantTrace> constants_used;
};

/// |lambda_k(O) - lambda_k(O~)| <= max{lambda_k^2} * gamma_alpha * V.
double stability_bound(int k, double lambda_k_max_sq, double gamma_alpha_value,
                       double variation);

/// lambda_1(O) <= lambda_1(D) + lambda_1^2(D_rho) gamma_alpha V,
/// lambda_1(D_rho) = j_{0,1}^2 / rho^2. Requires area = pi.
double lambda1_upper(const BoundInputs& in, const DiscConstants& disc);

/// lambda_2(O) >= lambda_2(D) - lambda_*^2 lambda_1^2(D_rho) gamma_alpha V.
BoundValue lambda2_lower(const BoundInputs& in, const DiscConstants& disc);

/// lambda_2/lambda_1 >= lambda2_lower / lambda1_upper.
BoundValue ppw_ratio_lower(const BoundInputs& in, const DiscConstants& disc);

/// lambda_2 - lambda_1 >= gap of the disc minus (lambda_*^2 + 1) x slack.
BoundValue spectral_gap_lower(const BoundInputs& in, const DiscConstants& disc);

/// Payne-Weinberger upper estimate from area and perimeter.
double payne_weinberger_upper(double area, double perimeter, const DiscConstants& disc);

/// Faber-Krahn: lambda_1(O) >= pi j_{0,1}^2 / |O|.
double faber_krahn_lower(double area, const DiscConstants& disc);

/// (lambda_k(D) - t^4 lambda_k(D)^2 gamma_alpha V, t^2 lambda_k(D)).
/// `containment_certified` must come from check_disc_containment.
std::pair<double, double> high_eigenvalue_bounds(int k, double t,
                                                 double gamma_alpha_value,
                                                 double variation,
                                                 const DiscConstants& disc,
                                                 bool containment_certified);

/// lambda_n/lambda_m >= (lower half at n) / (t^2 lambda_m(D)), m < n.
BoundValue high_ratio_lower(int m, int n, double t, double gamma_alpha_value,
                            double variation, const DiscConstants& disc,
                            bool containment_certified);

/// The epicycloid example constant
/// C(n) = lambda_1^2(D_rho) gamma_inf (sqrt(4n/(n+1)) + 1) sqrt(2 pi (1 - sqrt(n/(n+1)))).
double epicycloid_C(int n, double gamma_inf, const DiscConstants& disc);

}  // namespace sgb::bounds
