#include "sgb/quasidisc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sgb/minimize.hpp"

namespace sgb::quasidisc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLn10 = 2.302585092994045684017991454684364208;
constexpr double kLog10E = 0.434294481903251827651128918916605082;

double log10_of(double x) { return std::log10(x); }

// log10(a + b) for a, b given as log10; handles zero signs.
LogScaledReal log_add(LogScaledReal a, LogScaledReal b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  double hi = std::max(a.log10_value, b.log10_value);
  double lo = std::min(a.log10_value, b.log10_value);
  return LogScaledReal::from_log10(hi + std::log1p(std::pow(10.0, lo - hi)) * kLog10E);
}

// log10(1 - 10^l) for l < 0, accurate when 10^l is close to 1.
double log10_one_minus(double l) {
  if (l >= 0.0) throw std::domain_error("log10_one_minus: argument not < 1");
  return std::log10(-std::expm1(l * kLn10));
}

// log10 of the exponential factor exp{K pi^2 (2+pi^2)^2 / (2 log 3)}.
double log10_exp_factor_jacobian(double K) {
  double c = kPi * kPi * (2.0 + kPi * kPi) * (2.0 + kPi * kPi);
  return K * c / (2.0 * std::log(3.0)) * kLog10E;
}

// log10 of exp{K^2 pi^2 (2+pi^2)^2 / (4 log 3)} (alternative nu form).
double log10_exp_factor_gamma(double K) {
  double c = kPi * kPi * (2.0 + kPi * kPi) * (2.0 + kPi * kPi);
  return K * K * c / (4.0 * std::log(3.0)) * kLog10E;
}

}  // namespace

LogScaledReal LogScaledReal::from_linear(double v) {
  if (v < 0.0) throw std::domain_error("LogScaledReal: negative value");
  if (v == 0.0) return zero();
  return {std::log10(v), 1};
}

double LogScaledReal::to_linear() const {
  if (sign == 0) return 0.0;
  return std::pow(10.0, log10_value);  // +inf past ~308
}

LogScaledReal operator+(LogScaledReal a, LogScaledReal b) { return log_add(a, b); }

double log10_nu_jacobian(double kappa, double K) {
  if (kappa <= 1.0) return -std::numeric_limits<double>::infinity();
  return 8.0 * kappa + log10_of((2.0 * kappa - 2.0) / (2.0 * kappa - 1.0)) +
         2.0 * kappa * log10_of(24.0 * kPi * kPi * K);
}

bool nu_jacobian_feasible(double kappa, double K) {
  return log10_nu_jacobian(kappa, K) < 0.0;
}

LogScaledReal inverse_holder_constant(double kappa, double K) {
  if (K <= 1.0) throw std::domain_error("inverse_holder_constant: K must exceed 1");
  if (kappa <= 1.0 || kappa >= K / (K - 1.0))
    throw std::domain_error("inverse_holder_constant: kappa outside (1, K/(K-1))");
  double l_nu = log10_nu_jacobian(kappa, K);
  if (l_nu >= 0.0) throw std::domain_error("inverse_holder_constant: nu >= 1");
  // log10 C_kappa = 6 - (1/(2 kappa)) log10((2 kappa - 1)(1 - nu))
  double l_ck = 6.0 - (log10_of(2.0 * kappa - 1.0) + log10_one_minus(l_nu)) / (2.0 * kappa);
  double l = 2.0 * l_ck + log10_of(K) + (1.0 / kappa - 1.0) * log10_of(kPi) -
             log10_of(4.0) + log10_exp_factor_jacobian(K);
  return LogScaledReal::from_log10(l);
}

double log10_nu_gamma_s(double s, double K) {
  // nu = 10^{4 gamma} ((gamma-2)/(gamma-1)) (24 pi^2 K^2)^gamma, gamma = 2 + s
  if (s <= 0.0) return -std::numeric_limits<double>::infinity();
  return 4.0 * (2.0 + s) + std::log10(s) - std::log10(1.0 + s) +
         (2.0 + s) * log10_of(24.0 * kPi * kPi * K * K);
}

LogScaledReal conformal_derivative_bound_s(double s, double K, double area) {
  if (K <= 1.0) throw std::domain_error("conformal_derivative_bound: K must exceed 1");
  if (s <= 0.0) throw std::domain_error("conformal_derivative_bound: gamma must exceed 2");
  double l_nu = log10_nu_gamma_s(s, K);
  if (l_nu >= 0.0) throw std::domain_error("conformal_derivative_bound: nu >= 1");
  double gamma = 2.0 + s;
  // log10 C_gamma = 6 - (1/gamma) log10((gamma - 1)(1 - nu))
  double l_cg = 6.0 - (std::log1p(s) * kLog10E + log10_one_minus(l_nu)) / gamma;
  double l = l_cg + log10_of(K) + (-s / (2.0 * gamma)) * log10_of(kPi) - log10_of(2.0) +
             log10_exp_factor_gamma(K) + 0.5 * log10_of(area);
  return LogScaledReal::from_log10(l);
}

LogScaledReal conformal_derivative_bound(double gamma, double K, double area) {
  return conformal_derivative_bound_s(gamma - 2.0, K, area);
}

double feasible_smax(double K) {
  if (K <= 1.0) throw std::domain_error("feasible_smax: K must exceed 1");
  // log10 nu(s) is strictly increasing in s and -> -inf as s -> 0+.
  double lo = 1e-20, hi = 1e-7;
  if (log10_nu_gamma_s(lo, K) >= 0.0)
    throw std::runtime_error("feasible_smax: no feasible window");
  if (log10_nu_gamma_s(hi, K) < 0.0)
    throw std::runtime_error("feasible_smax: bracket too small");
  // bisect in log space for uniform relative accuracy
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < 200; ++i) {
    double lm = 0.5 * (llo + lhi);
    (log10_nu_gamma_s(std::exp(lm), K) < 0.0 ? llo : lhi) = lm;
  }
  return std::exp(llo);
}

double feasible_alpha_max(double K) { return 2.0 + feasible_smax(K); }

MAlphaResult m_alpha(double K, double area) {
  double smax = feasible_smax(K);
  // objective(s) = log10[ gamma_alpha(2+s) ( cdb(s) + pi^{1/(2+s)} ) ]
  auto obj = [&](double t) {
    double s = std::exp(t);
    auto g = constants::gamma_alpha_from_s(s);
    LogScaledReal factor =
        log_add(conformal_derivative_bound_s(s, K, area),
                LogScaledReal::from_log10(log10_of(kPi) / (2.0 + s)));
    return g.log_value * kLog10E + factor.log10_value;
  };
  double t_hi = std::log(smax * (1.0 - 1e-9));
  auto r = minimize::scan_golden(obj, t_hi - 30.0, t_hi, 1000, 1e-12);
  MAlphaResult out;
  out.s_opt = std::exp(r.x);
  out.alpha_opt = 2.0 + out.s_opt;
  out.p_opt = constants::gamma_alpha_from_s(out.s_opt).p_star;
  out.value = LogScaledReal::from_log10(r.f);
  return out;
}

QuasidiscReport report_from_m(LogScaledReal m_value, double rho, double deviation_l2,
                              const constants::DiscConstants& disc) {
  QuasidiscReport rep;
  rep.m = MAlphaResult{m_value, 0.0, 0.0, 0.0};
  double l1rho = disc.lambda1 / (rho * rho);
  // slack = lambda_1(D_rho)^2 * M * ||phi' - 1||_2, in log domain
  LogScaledReal slack = LogScaledReal::from_linear(l1rho * l1rho) * m_value *
                        LogScaledReal::from_linear(deviation_l2);
  rep.slack = slack;
  rep.slack_log10 = slack.sign == 0 ? -std::numeric_limits<double>::infinity()
                                    : slack.log10_value;
  rep.slack_sign = slack.sign;
  double slack_lin = slack.to_linear();
  rep.lambda1_upper_linear = disc.lambda1 + slack_lin;
  rep.lambda1_upper_finite = std::isfinite(rep.lambda1_upper_linear);
  // lambda_2 lower: lambda_2(D) - lambda_*^2 lambda_1(D_rho)^2 M ||phi'-1||_2
  double ls2 = disc.lambda_star * disc.lambda_star;
  double l2_low = disc.lambda2 - ls2 * slack_lin;
  rep.lambda2_lower = {l2_low, !(l2_low > 0.0)};
  double denom = rep.lambda1_upper_linear;
  if (rep.lambda2_lower.vacuous || !std::isfinite(denom) || denom <= 0.0) {
    rep.ratio_lower = {std::isfinite(denom) && denom > 0.0 ? l2_low / denom
                                                           : 0.0,
                       true};
  } else {
    rep.ratio_lower = {l2_low / denom, false};
  }
  return rep;
}

QuasidiscReport quasidisc_bounds(double K, double rho, double deviation_l2,
                                 double area, const constants::DiscConstants& disc) {
  if (K <= 1.0) throw std::domain_error("quasidisc_bounds: K must exceed 1");
  if (std::abs(area - kPi) > 1e-6)
    throw std::domain_error("quasidisc_bounds: domain must be normalized to area pi");
  MAlphaResult m = m_alpha(K, area);
  QuasidiscReport rep = report_from_m(m.value, rho, deviation_l2, disc);
  rep.m = m;
  rep.params.K = K;
  rep.params.alpha_star = 2.0 * K * K / (K * K - 1.0);
  rep.params.feasible_alpha_max = feasible_alpha_max(K);
  rep.params.area = area;
  return rep;
}

}  // namespace sgb::quasidisc
