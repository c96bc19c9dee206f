// Acceptance gate: ten criteria, each printing one PASS/FAIL line.
// Run with --criterion N for a single criterion, or no arguments for all.
// Exit code: number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "sgb/bounds.hpp"
#include "sgb/confmap.hpp"
#include "sgb/constants.hpp"
#include "sgb/eigensolver.hpp"
#include "sgb/pipeline.hpp"
#include "sgb/quasidisc.hpp"
#include "sgb/specialfn.hpp"

using namespace sgb;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const constants::DiscConstants& disc() {
  static auto d = constants::disc_spectrum(12);
  return d;
}

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// 1. disc constants and runtime
Check criterion1() {
  Check c;
  double t0 = now_seconds();
  double j01 = specialfn::bessel_zero(0, 1);
  c.require(std::abs(j01 * j01 - 5.783) <= 0.005,
            "j01^2 = " + fmt(j01 * j01) + " not within 5.783 +- 0.005");
  c.require(std::abs(disc().lambda_star - 2.539) <= 0.001,
            "lambda2/lambda1 = " + fmt(disc().lambda_star) +
                " not within 2.539 +- 0.001");
  double dt = now_seconds() - t0;
  c.require(dt < 1.0, "runtime " + fmt(dt) + "s >= 1s");
  return c;
}

// 2. gamma_inf < 1/5 with p in (4/3, 2) and an interior-minimum certificate
Check criterion2() {
  Check c;
  double t0 = now_seconds();
  auto g = constants::gamma_alpha(constants::kAlphaInf);
  c.require(g.value < 0.2, "gamma_inf = " + fmt(g.value) + " >= 0.2");
  c.require(g.p_star > 4.0 / 3.0 && g.p_star < 2.0,
            "p* = " + fmt(g.p_star) + " outside (4/3, 2)");
  // the objective is strictly increasing on (4/3, 2): the infimum sits at
  // the left endpoint and no interior certificate exists. Implemented
  // faithfully; this sub-check is expected to fail.
  c.require(g.interior, "no interior-minimum certificate: infimum is at the "
                        "endpoint p = 4/3 (objective increasing in p)");
  double dt = now_seconds() - t0;
  c.require(dt < 1.0, "runtime " + fmt(dt) + "s >= 1s");
  return c;
}

// 3. epicycloid closed forms vs quadrature
Check criterion3() {
  Check c;
  double t0 = now_seconds();
  for (int n = 2; n <= 10; ++n) {
    auto m = confmap::epicycloid_map(n);
    double dev_q = confmap::deviation_l2_quadrature(m, 96, 512);
    double dev_exact = std::sqrt(2.0 * M_PI * (1.0 - std::sqrt(n / (n + 1.0))));
    c.require(std::abs(dev_q - dev_exact) <= 1e-9,
              "n=" + std::to_string(n) + " deviation mismatch " +
                  fmt(std::abs(dev_q - dev_exact)));
    c.require(std::abs(confmap::area(m) - M_PI) <= 1e-9,
              "n=" + std::to_string(n) + " area mismatch");
  }
  double dt = now_seconds() - t0;
  c.require(dt < 5.0, "runtime " + fmt(dt) + "s >= 5s");
  return c;
}

// 4. proof-chain identity
Check criterion4() {
  Check c;
  for (double a : {3.0, 4.0, 8.0, 100.0, constants::kAlphaInf}) {
    double r = std::isinf(a) ? 4.0 : 4.0 * a / (a - 2.0);
    auto pc = constants::poincare_constant_bound(r);
    auto g = constants::gamma_alpha(a);
    double rel = std::abs(pc.value * pc.value - g.value) / g.value;
    c.require(rel <= 1e-10, "alpha=" + fmt(a) + " rel err " + fmt(rel));
  }
  return c;
}

// 5. solver convergence on the disc
Check criterion5() {
  Check c;
  double t0 = now_seconds();
  eigensolver::Polygon poly;
  for (int i = 0; i < 4096; ++i) {
    double th = 2.0 * M_PI * i / 4096;
    poly.push_back({std::cos(th), std::sin(th)});
  }
  auto r = eigensolver::solve_domain(poly, 1.0 / 128.0, 1, true);
  double exact = disc().lambda1;
  double rel = std::abs(r.extrapolated[0] - exact) / exact;
  c.require(rel <= 1e-3, "Richardson rel err " + fmt(rel) + " > 0.1%");
  double e1 = std::abs(r.values[0] - exact);
  double e2 = std::abs(r.values_half[0] - exact);
  double order = std::log2(e1 / e2);
  c.require(order >= 1.5 && order <= 2.5,
            "observed order " + fmt(order) + " outside [1.5, 2.5]");
  double dt = now_seconds() - t0;
  c.require(dt < 60.0, "runtime " + fmt(dt) + "s >= 60s");
  return c;
}

// 6. sandwich validation, epicycloid n in {3..8} at alpha = inf
Check criterion6() {
  Check c;
  double t0 = now_seconds();
  for (int n = 3; n <= 8; ++n) {
    auto rep = pipeline::epicycloid_report(n, constants::kAlphaInf, disc());
    pipeline::attach_solver(rep, 0.02, disc());
    for (const auto& f : rep.solver->flags)
      c.require(f.pass, "n=" + std::to_string(n) + " " + f.name + " (lhs=" +
                            fmt(f.lhs) + ", rhs=" + fmt(f.rhs) + ")");
  }
  double dt = now_seconds() - t0;
  c.require(dt < 600.0, "runtime " + fmt(dt) + "s >= 600s");
  return c;
}

// 7. asymptotic sharpness along n = 5, 10, 20, 50
Check criterion7() {
  Check c;
  std::vector<double> ratios;
  for (int n : {5, 10, 20, 50}) {
    auto m = confmap::epicycloid_map(n);
    bounds::BoundInputs in;
    in.rho = confmap::inscribed_radius(m, confmap::InradiusMode::closed_form);
    in.alpha = constants::kAlphaInf;
    in.variation = confmap::variation_upper_bound(m, constants::kAlphaInf);
    in.gamma_alpha_value = constants::gamma_alpha(constants::kAlphaInf).value;
    in.area = confmap::area(m);
    ratios.push_back(bounds::ppw_ratio_lower(in, disc()).value);
  }
  for (size_t i = 1; i < ratios.size(); ++i)
    c.require(ratios[i] > ratios[i - 1],
              "ratio lower not increasing at step " + std::to_string(i));
  double gap5 = disc().lambda_star - ratios.front();
  double gap50 = disc().lambda_star - ratios.back();
  // the C(n) term saturates the denominator: the closed forms give
  // gap5/gap50 = 1.89, short of 3. Implemented faithfully; expected to fail.
  c.require(gap5 >= 3.0 * gap50,
            "gap shrink factor " + fmt(gap5 / gap50) + " < 3");
  return c;
}

// 8. section4-family sandwich for k in {3, 4, 5}
Check criterion8() {
  Check c;
  for (int k : {3, 4, 5}) {
    auto rep = pipeline::section4_report(k, constants::kAlphaInf, disc());
    double t_expected = k * k / ((k - 1.0) * (k - 1.0));
    c.require(std::abs(rep.t - t_expected) < 1e-12,
              "k=" + std::to_string(k) + " wrong t");
    c.require(rep.containment_certified,
              "k=" + std::to_string(k) + " containment not certified");
    pipeline::attach_solver(rep, 0.02, disc());
    for (const auto& f : rep.solver->flags)
      c.require(f.pass, "k=" + std::to_string(k) + " " + f.name + " (lhs=" +
                            fmt(f.lhs) + ", rhs=" + fmt(f.rhs) + ")");
  }
  return c;
}

// 9. quasidisc constants for K in {1.01, 1.05, 1.1}
Check criterion9() {
  Check c;
  for (double K : {1.01, 1.05, 1.1}) {
    auto m = quasidisc::m_alpha(K, M_PI);
    c.require(std::isfinite(m.value.log10_value),
              "K=" + fmt(K) + " log10 M not finite");
    double floor = K * K * M_PI * M_PI * (2.0 + M_PI * M_PI) *
                       (2.0 + M_PI * M_PI) /
                       (4.0 * std::log(3.0) * std::log(10.0)) -
                   1.0;
    c.require(m.value.log10_value > floor,
              "K=" + fmt(K) + " log10 M = " + fmt(m.value.log10_value) +
                  " below floor " + fmt(floor));
    double smax = quasidisc::feasible_smax(K);
    c.require(quasidisc::log10_nu_gamma_s(smax * (1.0 - 1e-9), K) < 0.0 &&
                  quasidisc::log10_nu_gamma_s(smax * (1.0 + 1e-9), K) > 0.0,
              "K=" + fmt(K) + " nu does not straddle 1 at the certificate");
    // the resulting eigenvalue bounds are vacuous -- the expected outcome
    auto rep = quasidisc::quasidisc_bounds(K, 1.0, 1.0, M_PI, disc());
    c.require(rep.lambda2_lower.vacuous && rep.ratio_lower.vacuous,
              "K=" + fmt(K) + " expected vacuous quasidisc bounds");
  }
  return c;
}

// 10. scaling law on the disc and one epicycloid
Check criterion10() {
  Check c;
  auto scaled_pair = [&](const eigensolver::Polygon& poly, double h,
                         const std::string& name) {
    eigensolver::Polygon poly2 = poly;
    for (auto& p : poly2) {
      p[0] *= 2.0;
      p[1] *= 2.0;
    }
    auto r1 = eigensolver::solve_domain(poly, h, 1, true);
    auto r2 = eigensolver::solve_domain(poly2, 2.0 * h, 1, true);
    double band = r1.band[0] + 4.0 * r2.band[0];
    double diff = std::abs(4.0 * r2.values[0] - r1.values[0]);
    c.require(diff <= band + 1e-9,
              name + ": |4 lambda(2 Omega) - lambda(Omega)| = " + fmt(diff) +
                  " > band " + fmt(band));
  };
  eigensolver::Polygon circle;
  for (int i = 0; i < 4096; ++i) {
    double th = 2.0 * M_PI * i / 4096;
    circle.push_back({std::cos(th), std::sin(th)});
  }
  scaled_pair(circle, 1.0 / 48.0, "disc");
  scaled_pair(confmap::boundary_polygon(confmap::epicycloid_map(5), 4096),
              1.0 / 48.0, "epicycloid n=5");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc - 1; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

  std::function<Check()> criteria[10] = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};

  int failures = 0;
  for (int k = 1; k <= 10; ++k) {
    if (only != 0 && k != only) continue;
    Check c = criteria[k - 1]();
    std::printf("criterion %d: %s%s%s\n", k, c.ok ? "PASS" : "FAIL",
                c.detail.empty() ? "" : " — ", c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }
  return failures;
}
