#pragma once

#include <functional>

namespace sgb::minimize {

struct ScalarMin {
  double x = 0.0;       // argmin
  double f = 0.0;       // objective at argmin
  bool interior = false;  // one-sided differences at x have opposite signs
};

/// Minimize f on the closed interval [a, b]: dense scan (nscan points)
/// followed by golden-section refinement of the bracketing neighbours.
/// Works for edge minima too (the result is then clamped to a or b and
/// `interior` is false).
ScalarMin scan_golden(const std::function<double(double)>& f, double a, double b,
                      int nscan, double xtol);

}  // namespace sgb::minimize
