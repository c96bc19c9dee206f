#include "sgb/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sgb/minimize.hpp"
#include "sgb/specialfn.hpp"

namespace sgb::constants {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLn2 = 0.69314718055994530941723212145817657;
constexpr double kLnPi = 1.14472988584940017414342735135305871;

// Both infima are evaluated in u = 2 - p with relative endpoint clamping,
// so that the proof-chain identity A_{r,2}^2 = gamma_alpha holds to
// roundoff and the quasidisc window (u_max ~ 1e-13) stays resolvable.
constexpr double kClampRel = 1e-9;

Infimum minimize_log_u(const std::function<double(double)>& log_obj, double u_max) {
  // scan log-spaced in u over [u_max * 1e-13, u_max * (1 - 1e-9)]
  const double t_hi = std::log(u_max * (1.0 - kClampRel));
  const double t_lo = t_hi - 30.0;
  auto g = [&](double t) { return log_obj(std::exp(t)); };
  auto m = sgb::minimize::scan_golden(g, t_lo, t_hi, 1000, 1e-12);
  Infimum r;
  const double u_star = std::exp(m.x);
  r.p_star = 2.0 - u_star;
  r.log_value = m.f;
  r.value = std::exp(m.f);
  r.interior = m.interior;
  return r;
}

}  // namespace

double talenti_constant(double p) {
  if (!(p > 1.0 && p < 2.0))
    throw std::domain_error("talenti_constant: requires p in (1,2)");
  using specialfn::gamma_fn;
  return 1.0 / (std::sqrt(kPi) * std::pow(2.0, 1.0 / p)) *
         std::pow((p - 1.0) / (2.0 - p), (p - 1.0) / p) /
         std::sqrt(gamma_fn(2.0 / p) * gamma_fn(3.0 - 2.0 / p));
}

double poincare_objective_log(double p, double r) {
  const double u = 2.0 - p;
  return ((p - 1.0) / p) * std::log((p - 1.0) / u) +
         (2.0 - r) / (2.0 * r) * kLnPi - (1.0 / p) * kLn2 -
         0.5 * (specialfn::log_gamma(2.0 / p) + specialfn::log_gamma(3.0 - 2.0 / p));
}

Infimum poincare_constant_bound(double r) {
  if (!(r >= 2.0)) throw std::domain_error("poincare_constant_bound: requires r >= 2");
  // p in (2r/(r+2), 2)  <=>  u = 2 - p in (0, 4/(r+2))
  const double u_max = 4.0 / (r + 2.0);
  auto log_obj = [r](double u) { return poincare_objective_log(2.0 - u, r); };
  return minimize_log_u(log_obj, u_max);
}

double gamma_alpha_objective_log_u(double u, double s) {
  const double p = 2.0 - u;
  // prefactor exponent of pi: -(alpha+2)/(2 alpha) with alpha = 2 + s
  const double pi_coeff =
      std::isinf(s) ? -0.5 : -(4.0 + s) / (2.0 * (2.0 + s));
  return (2.0 * (p - 1.0) / p) * std::log((p - 1.0) / u) + pi_coeff * kLnPi -
         (2.0 / p) * kLn2 -
         specialfn::log_gamma(2.0 / p) - specialfn::log_gamma(3.0 - 2.0 / p);
}

Infimum gamma_alpha_from_s(double s) {
  if (!(s > 0.0)) throw std::domain_error("gamma_alpha: requires alpha > 2");
  // p-interval (4 alpha/(3 alpha - 2), 2)  <=>  u in (0, 2s/(4+3s));
  // alpha = inf gives u_max = 2/3 exactly.
  const double u_max = std::isinf(s) ? 2.0 / 3.0 : 2.0 * s / (4.0 + 3.0 * s);
  auto log_obj = [s](double u) { return gamma_alpha_objective_log_u(u, s); };
  return minimize_log_u(log_obj, u_max);
}

Infimum gamma_alpha(double alpha) {
  if (std::isinf(alpha)) return gamma_alpha_from_s(kAlphaInf);
  if (!(alpha > 2.0)) throw std::domain_error("gamma_alpha: requires alpha > 2");
  return gamma_alpha_from_s(alpha - 2.0);
}

DiscConstants disc_spectrum(int count) {
  if (count < 1 || count > 50)
    throw std::domain_error("disc_spectrum: requires 1 <= count <= 50");
  // k-way merge over the doubly monotone array j_{m,l}: popping the
  // smallest candidate admits (m, l+1), and popping (m, 1) admits (m+1, 1).
  struct Cand { double z; int m; int l; };
  auto cmp = [](const Cand& a, const Cand& b) { return a.z > b.z; };
  std::vector<Cand> heap{{specialfn::bessel_zero_any(0, 1), 0, 1}};
  std::vector<double> spectrum;
  while (static_cast<int>(spectrum.size()) < count) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const Cand c = heap.back();
    heap.pop_back();
    spectrum.push_back(c.z * c.z);
    if (c.m >= 1) spectrum.push_back(c.z * c.z);  // multiplicity 2
    heap.push_back({specialfn::bessel_zero_any(c.m, c.l + 1), c.m, c.l + 1});
    std::push_heap(heap.begin(), heap.end(), cmp);
    if (c.l == 1) {
      heap.push_back({specialfn::bessel_zero_any(c.m + 1, 1), c.m + 1, 1});
      std::push_heap(heap.begin(), heap.end(), cmp);
    }
  }
  spectrum.resize(count);

  DiscConstants d;
  const double j01 = specialfn::bessel_zero(0, 1);
  const double j11 = specialfn::bessel_zero(1, 1);
  d.j01 = j01;
  d.j1_at_j01 = specialfn::bessel_j(1, j01);
  d.lambda1 = j01 * j01;
  d.lambda2 = j11 * j11;
  d.lambda_star = d.lambda2 / d.lambda1;
  d.spectrum = std::move(spectrum);
  return d;
}

}  // namespace sgb::constants
