#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sgb/bounds.hpp"
#include "sgb/confmap.hpp"
#include "sgb/constants.hpp"
#include "sgb/quasidisc.hpp"

using namespace sgb;
using quasidisc::LogScaledReal;

namespace {
const constants::DiscConstants& disc() {
  static auto d = constants::disc_spectrum(12);
  return d;
}

double exp_floor_log10(double K) {
  // dominant exponential term of the derivative bound, in log10
  double c = M_PI * M_PI * (2.0 + M_PI * M_PI) * (2.0 + M_PI * M_PI);
  return K * K * c / (4.0 * std::log(3.0) * std::log(10.0));
}
}  // namespace

TEST_CASE("log-scaled arithmetic") {
  auto a = LogScaledReal::from_linear(100.0);
  auto b = LogScaledReal::from_linear(10.0);
  CHECK((a * b).log10_value == doctest::Approx(3.0).epsilon(1e-14));
  CHECK((a + b).to_linear() == doctest::Approx(110.0).epsilon(1e-13));
  auto z = LogScaledReal::zero();
  CHECK((a + z).log10_value == doctest::Approx(2.0));
  CHECK((z * a).is_zero());
  CHECK(z < a);
  CHECK_THROWS(LogScaledReal::from_linear(-1.0));
}

TEST_CASE("nu for the jacobian inequality") {
  // the 10^{8 kappa} factor alone makes nu >= 1 for any kappa
  // bounded away from 1: even kappa = 1.000001 at K = 1.01 is infeasible
  CHECK(quasidisc::log10_nu_jacobian(1.000001, 1.01) > 0.0);
  CHECK_FALSE(quasidisc::nu_jacobian_feasible(1.000001, 1.01));
  // feasibility appears only within ~2e-13 of kappa = 1
  CHECK(quasidisc::nu_jacobian_feasible(1.0 + 1e-14, 1.01));
  // monotone increasing in kappa
  CHECK(quasidisc::log10_nu_jacobian(1.0 + 1e-14, 1.01) <
        quasidisc::log10_nu_jacobian(1.0 + 1e-12, 1.01));
  CHECK(quasidisc::log10_nu_jacobian(1.0, 1.01) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("inverse holder constant is dominated by the exponential factor") {
  double kappa = 1.0 + 1e-14, K = 1.01;
  auto c = quasidisc::inverse_holder_constant(kappa, K);
  double floor = K * M_PI * M_PI * (2.0 + M_PI * M_PI) * (2.0 + M_PI * M_PI) /
                 (2.0 * std::log(3.0) * std::log(10.0));
  CHECK(c.log10_value > floor - 1.0);
  CHECK(std::isfinite(c.log10_value));
  CHECK_THROWS(quasidisc::inverse_holder_constant(1.5, 1.01));  // nu >= 1
  CHECK_THROWS(quasidisc::inverse_holder_constant(0.9, 1.01));
}

TEST_CASE("feasible window certificates") {
  // frozen bisection roots of nu(s) = 1
  CHECK(quasidisc::feasible_smax(1.01) ==
        doctest::Approx(1.71274429923e-13).epsilon(1e-6));
  CHECK(quasidisc::feasible_smax(1.05) ==
        doctest::Approx(1.4662932304e-13).epsilon(1e-6));
  CHECK(quasidisc::feasible_smax(1.1) ==
        doctest::Approx(1.2173270855e-13).epsilon(1e-6));
  // nu straddles 1 at the certificate
  for (double K : {1.01, 1.05, 1.1}) {
    double s = quasidisc::feasible_smax(K);
    CHECK(quasidisc::log10_nu_gamma_s(s * (1.0 - 1e-9), K) < 0.0);
    CHECK(quasidisc::log10_nu_gamma_s(s * (1.0 + 1e-9), K) > 0.0);
    CHECK(quasidisc::feasible_alpha_max(K) ==
          doctest::Approx(2.0 + s).epsilon(1e-15));
  }
}

TEST_CASE("derivative bound finite within the window, throws outside") {
  double K = 1.05;
  double s = quasidisc::feasible_smax(K) * 0.5;
  auto b = quasidisc::conformal_derivative_bound_s(s, K, M_PI);
  CHECK(std::isfinite(b.log10_value));
  CHECK(b.log10_value > exp_floor_log10(K) - 1.0);
  CHECK_THROWS(quasidisc::conformal_derivative_bound(2.1, K, M_PI));  // nu >= 1
  CHECK_THROWS(quasidisc::conformal_derivative_bound(2.0, K, M_PI));
}

TEST_CASE("m_alpha: finite, above the exponential floor, frozen value") {
  for (double K : {1.01, 1.05, 1.1}) {
    auto m = quasidisc::m_alpha(K, M_PI);
    CHECK(std::isfinite(m.value.log10_value));
    CHECK(m.value.log10_value > exp_floor_log10(K) - 1.0);
    CHECK(m.alpha_opt > 2.0);
    CHECK(m.s_opt <= quasidisc::feasible_smax(K));
    CHECK(m.p_opt > 1.0);
    CHECK(m.p_opt < 2.0);
  }
  CHECK(quasidisc::m_alpha(1.05, M_PI).value.log10_value ==
        doctest::Approx(170.2263).epsilon(1e-5));
}

TEST_CASE("m_alpha inner infimum reproduces gamma_alpha structure") {
  // at the optimal s the objective splits as gamma_alpha(s) * factor(s)
  double K = 1.05;
  auto m = quasidisc::m_alpha(K, M_PI);
  auto g = constants::gamma_alpha_from_s(m.s_opt);
  auto factor = quasidisc::conformal_derivative_bound_s(m.s_opt, K, M_PI) +
                LogScaledReal::from_log10(std::log10(M_PI) / (2.0 + m.s_opt));
  double recomposed = g.log_value / std::log(10.0) + factor.log10_value;
  CHECK(m.value.log10_value == doctest::Approx(recomposed).epsilon(1e-12));
}

TEST_CASE("quasidisc bounds: vacuous as expected, shared structure") {
  auto rep = quasidisc::quasidisc_bounds(1.05, 1.0, 1.0, M_PI, disc());
  CHECK(rep.lambda2_lower.vacuous);
  CHECK(rep.ratio_lower.vacuous);
  CHECK(rep.params.alpha_star ==
        doctest::Approx(2.0 * 1.05 * 1.05 / (1.05 * 1.05 - 1.0)).epsilon(1e-14));
  CHECK_THROWS(quasidisc::quasidisc_bounds(1.0, 1.0, 1.0, M_PI, disc()));
  CHECK_THROWS(quasidisc::quasidisc_bounds(1.05, 1.0, 1.0, 2.0 * M_PI, disc()));

  // shared-path reduction: report_from_m with gamma_alpha (||phi'||+pi^{1/a})
  // reproduces the bounds-module formulas through the same code path
  double rho = 0.8, dev = 0.01, g = 0.1796, norm_sum = 2.9;
  auto m2 = LogScaledReal::from_linear(g * norm_sum);
  auto r2 = quasidisc::report_from_m(m2, rho, dev, disc());
  double l1rho = disc().lambda1 / (rho * rho);
  double slack = l1rho * l1rho * g * norm_sum * dev;
  CHECK(r2.lambda1_upper_linear ==
        doctest::Approx(disc().lambda1 + slack).epsilon(1e-12));
  double expected_lower = disc().lambda2 -
                          disc().lambda_star * disc().lambda_star * slack;
  CHECK(r2.lambda2_lower.value == doctest::Approx(expected_lower).epsilon(1e-12));

  // same reduction against the bounds module on a real epicycloid
  auto map = confmap::epicycloid_map(8);
  double alpha = constants::kAlphaInf;
  double ga = constants::gamma_alpha(alpha).value;
  double rho8 = confmap::inscribed_radius(map, confmap::InradiusMode::closed_form);
  double dev8 = confmap::deviation_norm_l2(map);
  double sum8 = confmap::derivative_norm(map, alpha) + 1.0;  // pi^{1/inf} = 1
  auto r3 = quasidisc::report_from_m(LogScaledReal::from_linear(ga * sum8),
                                     rho8, dev8, disc());
  sgb::bounds::BoundInputs in;
  in.rho = rho8;
  in.alpha = alpha;
  in.variation = confmap::variation_upper_bound(map, alpha);
  in.gamma_alpha_value = ga;
  in.area = confmap::area(map);
  CHECK(r3.lambda1_upper_linear ==
        doctest::Approx(sgb::bounds::lambda1_upper(in, disc())).epsilon(1e-12));
  CHECK(r3.lambda2_lower.value ==
        doctest::Approx(sgb::bounds::lambda2_lower(in, disc()).value).epsilon(1e-12));
  CHECK(r3.ratio_lower.value ==
        doctest::Approx(sgb::bounds::ppw_ratio_lower(in, disc()).value).epsilon(1e-12));
}
