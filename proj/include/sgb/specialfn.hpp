#pragma once

#include <stdexcept>
#include <vector>

namespace sgb::specialfn {

/// Gamma function for x > 0, fixed-coefficient Lanczos approximation.
/// Relative error below 1e-13 on [0.5, 10].
double gamma_fn(double x);

/// log(Gamma(x)) for x > 0.
double log_gamma(double x);

/// Bessel function of the first kind, order 0 or 1, x >= 0.
/// Power series for x <= 12, Hankel asymptotic expansion beyond.
double bessel_j(int order, double x);

/// Bessel J of any integer order >= 0 (power series, long double
/// accumulation). Used for the disc spectrum; slower than bessel_j.
double bessel_j_any(int order, double x);

/// k-th positive zero of J_order, order in {0,1}, k >= 1.
/// McMahon initial guess refined by safeguarded Newton.
double bessel_zero(int order, int k);

/// k-th positive zero of J_order for any integer order >= 0
/// (sign-change scan + bisection on bessel_j_any).
double bessel_zero_any(int order, int k);

struct BesselZeroTable {
  int order = 0;
  std::vector<double> zeros;  // j_{order,1} < j_{order,2} < ...
};

/// First `count` positive zeros of J_order, order in {0,1}.
BesselZeroTable bessel_zero_table(int order, int count);

}  // namespace sgb::specialfn
