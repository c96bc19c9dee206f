#include "sgb/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace sgb::bounds {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kAreaTol = 1e-6;

void require_normalized(const BoundInputs& in) {
  if (std::abs(in.area - kPi) > kAreaTol)
    throw std::invalid_argument("bounds: requires normalization area = pi");
  if (!(in.rho > 0.0)) throw std::invalid_argument("bounds: requires rho > 0");
}

// lambda_1^2(D_rho) gamma_alpha V -- the slack term shared by all the
// area-pi bounds.
double slack(const BoundInputs& in, const DiscConstants& disc) {
  const double lam_rho = disc.lambda1 / (in.rho * in.rho);
  return lam_rho * lam_rho * in.gamma_alpha_value * in.variation;
}

}  // namespace

double stability_bound(int k, double lambda_k_max_sq, double gamma_alpha_value,
                       double variation) {
  if (k < 1) throw std::invalid_argument("stability_bound: requires k >= 1");
  if (lambda_k_max_sq < 0.0 || gamma_alpha_value < 0.0 || variation < 0.0)
    throw std::invalid_argument("stability_bound: inputs must be >= 0");
  return lambda_k_max_sq * gamma_alpha_value * variation;
}

double lambda1_upper(const BoundInputs& in, const DiscConstants& disc) {
  require_normalized(in);
  return disc.lambda1 + slack(in, disc);
}

BoundValue lambda2_lower(const BoundInputs& in, const DiscConstants& disc) {
  require_normalized(in);
  const double v = disc.lambda2 - disc.lambda_star * disc.lambda_star * slack(in, disc);
  return {v, v <= 0.0};
}

BoundValue ppw_ratio_lower(const BoundInputs& in, const DiscConstants& disc) {
  const BoundValue num = lambda2_lower(in, disc);
  const double den = lambda1_upper(in, disc);
  return {num.value / den, num.vacuous};
}

BoundValue spectral_gap_lower(const BoundInputs& in, const DiscConstants& disc) {
  require_normalized(in);
  const double v = disc.lambda2 - disc.lambda1 -
                   (disc.lambda_star * disc.lambda_star + 1.0) * slack(in, disc);
  return {v, v <= 0.0};
}

double payne_weinberger_upper(double area, double perimeter, const DiscConstants& disc) {
  if (!(area > 0.0)) throw std::invalid_argument("payne_weinberger_upper: area <= 0");
  if (perimeter * perimeter < 4.0 * kPi * area * (1.0 - 1e-12))
    throw std::invalid_argument("payne_weinberger_upper: isoperimetric violation");
  const double j1sq = disc.j1_at_j01 * disc.j1_at_j01;
  const double bracket =
      1.0 + (1.0 / j1sq - 1.0) * (perimeter * perimeter / (4.0 * kPi * area) - 1.0);
  return kPi * disc.lambda1 / area * bracket;
}

double faber_krahn_lower(double area, const DiscConstants& disc) {
  if (!(area > 0.0)) throw std::invalid_argument("faber_krahn_lower: area <= 0");
  return kPi * disc.lambda1 / area;
}

std::pair<double, double> high_eigenvalue_bounds(int k, double t,
                                                 double gamma_alpha_value,
                                                 double variation,
                                                 const DiscConstants& disc,
                                                 bool containment_certified) {
  if (!containment_certified)
    throw std::invalid_argument("high_eigenvalue_bounds: containment not certified");
  if (k < 1 || k > static_cast<int>(disc.spectrum.size()))
    throw std::invalid_argument("high_eigenvalue_bounds: k outside spectrum range");
  const double lam = disc.spectrum[k - 1];
  const double t2 = t * t;
  return {lam - t2 * t2 * lam * lam * gamma_alpha_value * variation, t2 * lam};
}

BoundValue high_ratio_lower(int m, int n, double t, double gamma_alpha_value,
                            double variation, const DiscConstants& disc,
                            bool containment_certified) {
  if (!(m >= 1 && n > m))
    throw std::invalid_argument("high_ratio_lower: requires 1 <= m < n");
  const auto [lower_n, _] =
      high_eigenvalue_bounds(n, t, gamma_alpha_value, variation, disc, containment_certified);
  if (m > static_cast<int>(disc.spectrum.size()))
    throw std::invalid_argument("high_ratio_lower: m outside spectrum range");
  const double v = lower_n / (t * t * disc.spectrum[m - 1]);
  return {v, lower_n <= 0.0};
}

double epicycloid_C(int n, double gamma_inf, const DiscConstants& disc) {
  if (n < 2) throw std::invalid_argument("epicycloid_C: requires n >= 2");
  const double rho2 = std::pow((n - 1.0) / (n + 1.0), 1.5);
  const double lam_rho = disc.lambda1 / rho2;
  const double sup = std::sqrt(4.0 * n / (n + 1.0));
  const double dev = std::sqrt(2.0 * kPi * (1.0 - std::sqrt(n / (n + 1.0))));
  return lam_rho * lam_rho * gamma_inf * (sup + 1.0) * dev;
}

}  // namespace sgb::bounds
