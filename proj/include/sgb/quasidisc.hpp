#pragma once

#include "sgb/bounds.hpp"
#include "sgb/constants.hpp"

namespace sgb::quasidisc {

/// Nonnegative real carried as log10; the quasidisc constants overflow
/// double precision (the exponential factor alone is ~10^{137 K^2}).
struct LogScaledReal {
  double log10_value = 0.0;
  int sign = 1;  // 1 for positive, 0 for exact zero

  static LogScaledReal zero() { return {0.0, 0}; }
  static LogScaledReal from_log10(double l) { return {l, 1}; }
  static LogScaledReal from_linear(double v);

  double to_linear() const;  // +inf on overflow
  bool is_zero() const { return sign == 0; }

  friend LogScaledReal operator*(LogScaledReal a, LogScaledReal b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.log10_value + b.log10_value, 1};
  }
  friend LogScaledReal operator+(LogScaledReal a, LogScaledReal b);
  friend bool operator<(LogScaledReal a, LogScaledReal b) {
    if (a.sign == 0) return b.sign != 0;
    if (b.sign == 0) return false;
    return a.log10_value < b.log10_value;
  }
};

struct QuasidiscParams {
  double K = 1.0;
  double alpha_star = 0.0;         // 2K^2/(K^2-1), integrability ceiling
  double feasible_alpha_max = 0.0; // largest alpha with nu(alpha) < 1
  double area = 0.0;
};

/// log10 of nu = 10^{8 kappa} (2 kappa - 2)/(2 kappa - 1) (24 pi^2 K)^{2 kappa}
/// (inverse Holder inequality for Jacobians). -inf for kappa <= 1.
double log10_nu_jacobian(double kappa, double K);

/// Feasibility indicator nu < 1 for the Jacobian inequality.
bool nu_jacobian_feasible(double kappa, double K);

/// Prefactor of the inverse Holder inequality for Jacobians:
/// (C_kappa^2 K pi^{1/kappa - 1} / 4) exp{K pi^2 (2+pi^2)^2 / (2 log 3)}.
/// Requires 1 < kappa < K/(K-1) and nu < 1.
LogScaledReal inverse_holder_constant(double kappa, double K);

/// log10 of the alternative nu form with s = gamma - 2 (negative s gives a
/// vanishing factor and is treated as nu = 0, i.e. -inf).
double log10_nu_gamma_s(double s, double K);

/// Bound on ||phi'||_{L^gamma(D)} for a conformal map onto a K-quasidisc:
/// (C_gamma K pi^{(2-gamma)/(2 gamma)} / 2) exp{K^2 pi^2 (2+pi^2)^2 / (4 log 3)} |O|^{1/2}.
LogScaledReal conformal_derivative_bound(double gamma, double K, double area);

/// Same bound parametrized by s = gamma - 2 (precision-critical: the
/// feasible window has s ~ 1e-13).
LogScaledReal conformal_derivative_bound_s(double s, double K, double area);

/// Largest s = alpha - 2 with nu(alpha) < 1, by bisection on the strictly
/// increasing log10 nu.
double feasible_smax(double K);

/// feasible alpha itself (2 + smax; loses the window's precision but is
/// the reportable value).
double feasible_alpha_max(double K);

struct MAlphaResult {
  LogScaledReal value;
  double alpha_opt = 0.0;
  double s_opt = 0.0;  // alpha_opt - 2, exact
  double p_opt = 0.0;
};

/// Double infimum M_alpha(K) over alpha in (2, feasible) and p, in log10.
MAlphaResult m_alpha(double K, double area);

struct QuasidiscReport {
  QuasidiscParams params;
  MAlphaResult m;
  LogScaledReal slack;  // lambda_1^2(D_rho) M_alpha(K) ||phi'-1||_2
  double lambda1_upper_linear = 0.0;  // +inf if slack overflows
  bounds::BoundValue lambda2_lower;   // vacuous in practice
  bounds::BoundValue ratio_lower;
  bool lambda1_upper_finite = false;
  double slack_log10 = 0.0;
  int slack_sign = 1;
};

/// Quasidisc eigenvalue/ratio bounds with the slack evaluated in log
/// domain. Requires area = pi (tolerance 1e-6) and K > 1.
QuasidiscReport quasidisc_bounds(double K, double rho, double deviation_l2,
                                 double area, const constants::DiscConstants& disc);

/// Shared formula core: the same report from an externally supplied
/// multiplicative constant M (lets gamma_alpha (||phi'||_alpha + pi^{1/alpha})
/// reproduce the epicycloid-family bounds through the identical code path).
QuasidiscReport report_from_m(LogScaledReal m_value, double rho, double deviation_l2,
                              const constants::DiscConstants& disc);

}  // namespace sgb::quasidisc
