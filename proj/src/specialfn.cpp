#include "sgb/specialfn.hpp"

#include <cmath>
#include <limits>

namespace sgb::specialfn {

namespace {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

double lanczos_sum(double x) {
  // x is the shifted argument (original minus 1)
  double s = kLanczos[0];
  for (int k = 1; k < 15; ++k) s += kLanczos[k] / (x + k);
  return s;
}

constexpr double kPi = 3.14159265358979323846264338327950288;

// J0/J1 power series, long double accumulation. Valid for x <= ~16
// before cancellation erodes the 1e-12 target.
long double j_series(int order, long double x) {
  const long double q = x * x / 4.0L;
  long double term = (order == 0) ? 1.0L : x / 2.0L;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (std::abs(term) < 1e-22L * (std::abs(sum) + 1e-30L)) break;
  }
  return sum;
}

// Hankel asymptotic expansion for x > 12.
long double j_asymptotic(int order, long double x) {
  const long double mu = 4.0L * order * order;
  const long double ax8 = 8.0L * x;
  long double p = 1.0L, q = 0.0L;
  long double term = 1.0L;
  long double prev = std::numeric_limits<long double>::max();
  for (int k = 1; k < 40; ++k) {
    const long double f = mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L);
    term *= f / (static_cast<long double>(k) * ax8);
    if (std::abs(term) > prev) break;  // asymptotic series: stop before divergence
    prev = std::abs(term);
    const int m = k % 4;
    if (m == 1) q += term;
    else if (m == 2) p -= term;
    else if (m == 3) q -= term;
    else p += term;
    if (std::abs(term) < 1e-20L) break;
  }
  const long double chi = x - (2.0L * order + 1.0L) * static_cast<long double>(kPi) / 4.0L;
  return std::sqrt(2.0L / (static_cast<long double>(kPi) * x)) *
         (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_j_deriv(int order, double x) {
  if (order == 0) return -bessel_j(1, x);
  // J1'(x) = J0(x) - J1(x)/x
  if (x == 0.0) return 0.5;
  return bessel_j(0, x) - bessel_j(1, x) / x;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double bessel_j(int order, double x) {
  if (order != 0 && order != 1) throw std::domain_error("bessel_j: order must be 0 or 1");
  if (!(x >= 0.0)) throw std::domain_error("bessel_j: requires x >= 0");
  if (x <= 12.0) return static_cast<double>(j_series(order, x));
  return static_cast<double>(j_asymptotic(order, x));
}

double bessel_j_any(int order, double x) {
  if (order < 0) throw std::domain_error("bessel_j_any: order must be >= 0");
  if (!(x >= 0.0)) throw std::domain_error("bessel_j_any: requires x >= 0");
  return static_cast<double>(j_series(order, x));
}

double bessel_zero(int order, int k) {
  if (order != 0 && order != 1) throw std::domain_error("bessel_zero: order must be 0 or 1");
  if (k < 1) throw std::domain_error("bessel_zero: requires k >= 1");
  // McMahon expansion initial guess
  const double mu = 4.0 * order * order;
  const double beta = (k + 0.5 * order - 0.25) * kPi;
  double x = beta - (mu - 1.0) / (8.0 * beta) -
             4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * std::pow(8.0 * beta, 3));
  // Safeguarded Newton within a verified sign-change bracket
  double a = x - 0.6, b = x + 0.6;
  if (a < 0.1) a = 0.1;
  double fa = bessel_j(order, a), fb = bessel_j(order, b);
  for (int tries = 0; fa * fb > 0.0 && tries < 8; ++tries) {
    a -= 0.3;
    b += 0.3;
    if (a < 1e-3) a = 1e-3;
    fa = bessel_j(order, a);
    fb = bessel_j(order, b);
  }
  for (int it = 0; it < 100; ++it) {
    const double f = bessel_j(order, x);
    const double df = bessel_j_deriv(order, x);
    double step = (df != 0.0) ? f / df : 0.0;
    double xn = x - step;
    if (xn <= a || xn >= b || step == 0.0) xn = 0.5 * (a + b);  // bisection fallback
    const double fn = bessel_j(order, xn);
    if (fn * fa <= 0.0) { b = xn; fb = fn; } else { a = xn; fa = fn; }
    if (std::abs(xn - x) < 1e-13 && std::abs(fn) < 1e-13) return xn;
    x = xn;
  }
  return x;
}

double bessel_zero_any(int order, int k) {
  if (order == 0 || order == 1) return bessel_zero(order, k);
  if (order < 0 || k < 1) throw std::domain_error("bessel_zero_any: bad arguments");
  // scan for sign changes starting just above the order
  double x0 = order + 0.5;
  double f0 = bessel_j_any(order, x0);
  int found = 0;
  const double step = 0.25;
  for (int i = 0; i < 100000; ++i) {
    const double x1 = x0 + step;
    const double f1 = bessel_j_any(order, x1);
    if (f0 * f1 < 0.0) {
      ++found;
      if (found == k) {
        double a = x0, b = x1, fa = f0;
        for (int it = 0; it < 200; ++it) {
          const double m = 0.5 * (a + b);
          const double fm = bessel_j_any(order, m);
          if (fa * fm <= 0.0) b = m; else { a = m; fa = fm; }
          if (b - a < 1e-13) break;
        }
        return 0.5 * (a + b);
      }
    }
    x0 = x1;
    f0 = f1;
  }
  throw std::runtime_error("bessel_zero_any: zero not found");
}

BesselZeroTable bessel_zero_table(int order, int count) {
  BesselZeroTable t;
  t.order = order;
  t.zeros.reserve(count);
  for (int k = 1; k <= count; ++k) t.zeros.push_back(bessel_zero(order, k));
  return t;
}

}  // namespace sgb::specialfn
