#include "sgb/minimize.hpp"

#include <cmath>
#include <vector>

namespace sgb::minimize {

ScalarMin scan_golden(const std::function<double(double)>& f, double a, double b,
                      int nscan, double xtol) {
  const double w = b - a;
  int best = 0;
  double fbest = f(a);
  for (int i = 1; i < nscan; ++i) {
    const double x = a + w * i / (nscan - 1);
    const double fx = f(x);
    if (fx < fbest) { fbest = fx; best = i; }
  }
  double lo = a + w * std::max(0, best - 1) / (nscan - 1);
  double hi = a + w * std::min(nscan - 1, best + 1) / (nscan - 1);
  const double invphi = 0.6180339887498949;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > xtol) {
    if (fc < fd) {
      hi = d; d = c; fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c; c = d; fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }
  ScalarMin r;
  r.x = 0.5 * (lo + hi);
  r.f = f(r.x);
  // clamp to the better endpoint if the minimum sits on the boundary
  const double fa = f(a), fb = f(b);
  if (fa <= r.f) { r.x = a; r.f = fa; }
  if (fb < r.f) { r.x = b; r.f = fb; }
  // certificate step large enough that f'' h^2 clears roundoff in f
  const double h = std::max(8.0 * xtol, 1e-6 * (b - a));
  if (r.x - h > a && r.x + h < b) {
    const double dl = r.f - f(r.x - h);
    const double dr = f(r.x + h) - r.f;
    r.interior = (dl < 0.0 && dr > 0.0);
  }
  return r;
}

}  // namespace sgb::minimize
