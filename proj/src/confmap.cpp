#include "sgb/confmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sgb::confmap {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

double quad_tol() {
  if (const char* s = std::getenv("SGB_QUAD_TOL")) {
    const double v = std::atof(s);
    if (v > 0.0) return v;
  }
  return 1e-10;
}

// Gauss-Legendre nodes/weights on [0,1], cached per order.
struct GaussRule {
  std::vector<double> x, w;
};

const GaussRule& gauss_legendre_01(int n) {
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    r.x[i] = 0.5 * (1.0 + t);                  // map [-1,1] -> [0,1]
    r.w[i] = 1.0 / ((1.0 - t * t) * dp * dp);  // 2/((1-t^2)dp^2) * 1/2
  }
  cache.emplace(n, r);
  return cache[n];
}

double boundary_abs_deriv(const PolynomialConformalMap& map, double theta) {
  return map.deriv({std::cos(theta), std::sin(theta)}).abs();
}

}  // namespace

double Complex::abs() const { return std::hypot(re, im); }

Complex PolynomialConformalMap::eval(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

Complex PolynomialConformalMap::deriv(Complex z) const {
  Complex acc{0.0, 0.0};
  for (int j = static_cast<int>(coefficients.size()) - 1; j >= 1; --j)
    acc = acc * z + static_cast<double>(j) * coefficients[j];
  return acc;
}

PolynomialConformalMap epicycloid_map(int n) {
  if (n < 2) throw std::domain_error("epicycloid_map: requires n >= 2");
  PolynomialConformalMap m;
  const double c = std::sqrt(static_cast<double>(n) / (n + 1.0));
  m.coefficients.assign(n + 1, Complex{});
  m.coefficients[1] = {c, 0.0};
  m.coefficients[n] = {c / n, 0.0};
  m.label = "epicycloid(n=" + std::to_string(n) + ")";
  m.epicycloid_n = n;
  return m;
}

Section4Map section4_map(int k) {
  if (k < 2) throw std::domain_error("section4_map: requires k >= 2");
  Section4Map s;
  s.map.coefficients.assign(k + 1, Complex{});
  s.map.coefficients[1] = {1.0, 0.0};
  s.map.coefficients[k] = {1.0 / k, 0.0};
  s.map.label = "section4(k=" + std::to_string(k) + ")";
  s.t = static_cast<double>(k) * k / ((k - 1.0) * (k - 1.0));
  return s;
}

double lp_norm_quadrature(const PolynomialConformalMap& map, double alpha,
                          int radial_nodes, int angular_nodes) {
  const GaussRule& g = gauss_legendre_01(radial_nodes);
  double integral = 0.0;
  for (int i = 0; i < radial_nodes; ++i) {
    const double r = g.x[i];
    double ring = 0.0;
    for (int j = 0; j < angular_nodes; ++j) {
      const double th = kTwoPi * j / angular_nodes;
      const Complex z{r * std::cos(th), r * std::sin(th)};
      ring += std::pow(map.deriv(z).abs2(), 0.5 * alpha);
    }
    integral += g.w[i] * r * ring * (kTwoPi / angular_nodes);
  }
  return std::pow(integral, 1.0 / alpha);
}

double derivative_norm(const PolynomialConformalMap& map, double alpha) {
  if (std::isinf(alpha)) {
    // maximum-modulus principle: sup of |phi'| lies on |z| = 1
    const int n = 8192;
    int best = 0;
    double fbest = -1.0;
    for (int j = 0; j < n; ++j) {
      const double f = boundary_abs_deriv(map, kTwoPi * j / n);
      if (f > fbest) { fbest = f; best = j; }
    }
    double lo = kTwoPi * (best - 1) / n, hi = kTwoPi * (best + 1) / n;
    const double invphi = 0.6180339887498949;
    double c = hi - invphi * (hi - lo), d = lo + invphi * (hi - lo);
    double fc = boundary_abs_deriv(map, c), fd = boundary_abs_deriv(map, d);
    while (hi - lo > 1e-12) {
      if (fc > fd) { hi = d; d = c; fd = fc; c = hi - invphi * (hi - lo); fc = boundary_abs_deriv(map, c); }
      else { lo = c; c = d; fc = fd; d = lo + invphi * (hi - lo); fd = boundary_abs_deriv(map, d); }
    }
    return std::max(fbest, boundary_abs_deriv(map, 0.5 * (lo + hi)));
  }
  if (!(alpha > 2.0)) throw std::domain_error("derivative_norm: requires alpha > 2 or inf");
  const double tol = quad_tol();
  int nr = 128, nth = 512;
  double prev = lp_norm_quadrature(map, alpha, nr, nth);
  for (int level = 0; level < 4; ++level) {
    nr *= 2;
    nth *= 2;
    const double cur = lp_norm_quadrature(map, alpha, nr, nth);
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  return prev;
}

double deviation_norm_l2(const PolynomialConformalMap& map) {
  // phi' - 1 = sum_m d_m z^m with d_m = (m+1) c_{m+1} - [m == 0];
  // orthogonality on the disc gives ||z^m||^2 = pi/(m+1).
  double s = 0.0;
  const int deg = static_cast<int>(map.coefficients.size()) - 1;
  for (int m = 0; m + 1 <= deg; ++m) {
    Complex d = (m + 1.0) * map.coefficients[m + 1];
    if (m == 0) d.re -= 1.0;
    s += d.abs2() * kPi / (m + 1.0);
  }
  if (deg < 0) s = kPi;  // empty map: phi' - 1 = -1
  return std::sqrt(s);
}

double deviation_l2_quadrature(const PolynomialConformalMap& map,
                               int radial_nodes, int angular_nodes) {
  const GaussRule& g = gauss_legendre_01(radial_nodes);
  double integral = 0.0;
  for (int i = 0; i < radial_nodes; ++i) {
    const double r = g.x[i];
    double ring = 0.0;
    for (int j = 0; j < angular_nodes; ++j) {
      const double th = kTwoPi * j / angular_nodes;
      Complex d = map.deriv({r * std::cos(th), r * std::sin(th)});
      d.re -= 1.0;
      ring += d.abs2();
    }
    integral += g.w[i] * r * ring * (kTwoPi / angular_nodes);
  }
  return std::sqrt(integral);
}

double area(const PolynomialConformalMap& map) {
  double s = 0.0;
  for (std::size_t j = 1; j < map.coefficients.size(); ++j)
    s += static_cast<double>(j) * map.coefficients[j].abs2();
  return kPi * s;
}

double variation_upper_bound(const PolynomialConformalMap& map, double alpha) {
  const double pi_pow = std::isinf(alpha) ? 1.0 : std::pow(kPi, 1.0 / alpha);
  return (derivative_norm(map, alpha) + pi_pow) * deviation_norm_l2(map);
}

Polygon boundary_polygon(const PolynomialConformalMap& map, int samples) {
  if (samples < 4) throw std::domain_error("boundary_polygon: requires samples >= 4");
  Polygon poly(samples);
  for (int j = 0; j < samples; ++j) {
    const double th = kTwoPi * j / samples;
    const Complex w = map.eval({std::cos(th), std::sin(th)});
    poly[j] = {w.re, w.im};
  }
  return poly;
}

bool point_in_polygon(const Polygon& poly, double x, double y) {
  bool in = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const auto& a = poly[i];
    const auto& b = poly[j];
    if ((a[1] > y) != (b[1] > y)) {
      const double xc = a[0] + (y - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
      if (x < xc) in = !in;
    }
  }
  return in;
}

namespace {

// Distance field against a densely sampled boundary: bucketed
// nearest-point search, then exact distance to the segments adjacent
// to every near-minimal sample.
class BoundaryDistance {
 public:
  explicit BoundaryDistance(const Polygon& poly) : poly_(poly) {
    xmin_ = ymin_ = 1e300;
    xmax_ = ymax_ = -1e300;
    for (const auto& p : poly) {
      xmin_ = std::min(xmin_, p[0]); xmax_ = std::max(xmax_, p[0]);
      ymin_ = std::min(ymin_, p[1]); ymax_ = std::max(ymax_, p[1]);
    }
    cells_ = 256;
    cw_ = std::max(xmax_ - xmin_, ymax_ - ymin_) / cells_;
    buckets_.resize(cells_ * cells_);
    for (std::size_t k = 0; k < poly.size(); ++k)
      buckets_[cell_of(poly[k][0], poly[k][1])].push_back(static_cast<int>(k));
  }

  double operator()(double x, double y) const {
    // ring search for the nearest sample point
    const int ci = clampi(static_cast<int>((x - xmin_) / cw_));
    const int cj = clampi(static_cast<int>((y - ymin_) / cw_));
    double best = 1e300;
    for (int ring = 0; ring < 2 * cells_; ++ring) {
      bool any = false;
      for (int i = ci - ring; i <= ci + ring; ++i) {
        if (i < 0 || i >= cells_) continue;
        for (int j = cj - ring; j <= cj + ring; ++j) {
          if (j < 0 || j >= cells_) continue;
          if (std::max(std::abs(i - ci), std::abs(j - cj)) != ring) continue;
          any = true;
          for (int k : buckets_[i * cells_ + j])
            best = std::min(best, std::hypot(poly_[k][0] - x, poly_[k][1] - y));
        }
      }
      if (best < 1e299 && (ring - 1) * cw_ > best) break;
      (void)any;
    }
    // polish with the true segments near every sample within best + cell
    double exact = best;
    const double reach = best + 2.0 * cw_;
    const int r = static_cast<int>(reach / cw_) + 1;
    for (int i = ci - r; i <= ci + r; ++i) {
      if (i < 0 || i >= cells_) continue;
      for (int j = cj - r; j <= cj + r; ++j) {
        if (j < 0 || j >= cells_) continue;
        for (int k : buckets_[i * cells_ + j]) {
          exact = std::min(exact, seg_dist(k, x, y));
          exact = std::min(exact, seg_dist(prev(k), x, y));
        }
      }
    }
    return exact;
  }

 private:
  int clampi(int v) const { return std::clamp(v, 0, cells_ - 1); }
  int cell_of(double x, double y) const {
    return clampi(static_cast<int>((x - xmin_) / cw_)) * cells_ +
           clampi(static_cast<int>((y - ymin_) / cw_));
  }
  int prev(int k) const { return k == 0 ? static_cast<int>(poly_.size()) - 1 : k - 1; }
  double seg_dist(int k, double x, double y) const {
    const auto& a = poly_[k];
    const auto& b = poly_[(k + 1) % poly_.size()];
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double l2 = dx * dx + dy * dy;
    double t = l2 > 0.0 ? ((x - a[0]) * dx + (y - a[1]) * dy) / l2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(x - (a[0] + t * dx), y - (a[1] + t * dy));
  }

  const Polygon& poly_;
  double xmin_, xmax_, ymin_, ymax_, cw_;
  int cells_;
  std::vector<std::vector<int>> buckets_;
};

}  // namespace

double inscribed_radius(const PolynomialConformalMap& map, InradiusMode mode) {
  if (mode == InradiusMode::closed_form) {
    if (map.epicycloid_n < 2)
      throw std::domain_error("inscribed_radius: closed form needs an epicycloid map");
    const double n = map.epicycloid_n;
    return std::pow((n - 1.0) / (n + 1.0), 0.75);
  }
  const Polygon poly = boundary_polygon(map, 4096);
  BoundaryDistance dist(poly);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& p : poly) {
    xmin = std::min(xmin, p[0]); xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]); ymax = std::max(ymax, p[1]);
  }
  // scanline parity per grid row keeps the inside test O(rows * edges);
  // the coarse grid only has to land in the basin of the true maximum,
  // the pattern search below does the refinement
  const int g = 128;
  const double hx = (xmax - xmin) / (g - 1), hy = (ymax - ymin) / (g - 1);
  double best = 0.0, bx = 0.0, by = 0.0;
  for (int j = 0; j < g; ++j) {
    const double y = ymin + j * hy;
    std::vector<double> crossings;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, k = n - 1; i < n; k = i++) {
      const auto& a = poly[i];
      const auto& b = poly[k];
      if ((a[1] > y) != (b[1] > y))
        crossings.push_back(a[0] + (y - a[1]) * (b[0] - a[0]) / (b[1] - a[1]));
    }
    std::sort(crossings.begin(), crossings.end());
    for (std::size_t c = 0; c + 1 < crossings.size(); c += 2) {
      const int i0 = std::max(0, static_cast<int>(std::ceil((crossings[c] - xmin) / hx)));
      const int i1 = std::min(g - 1, static_cast<int>(std::floor((crossings[c + 1] - xmin) / hx)));
      for (int i = i0; i <= i1; ++i) {
        const double x = xmin + i * hx;
        const double d = dist(x, y);
        if (d > best) { best = d; bx = x; by = y; }
      }
    }
  }
  // local pattern-search refinement of the distance maximum
  double step = std::max(hx, hy);
  while (step > 1e-7) {
    bool improved = false;
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy) {
        if (dx == 0 && dy == 0) continue;
        const double d = dist(bx + dx * step, by + dy * step);
        if (d > best) { best = d; bx += dx * step; by += dy * step; improved = true; }
      }
    if (!improved) step *= 0.5;
  }
  return best;
}

bool check_disc_containment(const PolynomialConformalMap& map, double t) {
  if (!(t > 0.0)) throw std::domain_error("check_disc_containment: requires t > 0");
  Polygon poly = boundary_polygon(map, 4096);
  for (auto& p : poly) { p[0] *= t; p[1] *= t; }
  // dense sample of the closed unit disc: polar grid plus the unit circle
  for (int ir = 0; ir <= 64; ++ir) {
    const double r = ir / 64.0;
    const int nth = (ir == 64) ? 1024 : std::max(1, 8 * ir);
    for (int j = 0; j < nth; ++j) {
      const double th = kTwoPi * j / nth;
      if (!point_in_polygon(poly, r * std::cos(th), r * std::sin(th))) return false;
    }
  }
  return true;
}

int derivative_zero_count(const PolynomialConformalMap& map) {
  // winding number of phi' along |z| = 1 - 1e-6, adaptively refined so
  // no step turns the argument by more than pi/2
  const double r = 1.0 - 1e-6;
  auto arg_at = [&](double th) {
    const Complex w = map.deriv({r * std::cos(th), r * std::sin(th)});
    return std::atan2(w.im, w.re);
  };
  double total = 0.0;
  const int n0 = 4096;
  for (int j = 0; j < n0; ++j) {
    double a = kTwoPi * j / n0, b = kTwoPi * (j + 1) / n0;
    // recursive bisection via an explicit stack
    std::vector<std::pair<double, double>> stack{{a, b}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      double d = arg_at(hi) - arg_at(lo);
      while (d > kPi) d -= kTwoPi;
      while (d < -kPi) d += kTwoPi;
      if (std::abs(d) > 0.5 * kPi && hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
      } else {
        total += d;
      }
    }
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

nlohmann::json map_to_json(const PolynomialConformalMap& map) {
  nlohmann::json j;
  j["label"] = map.label;
  auto& c = j["coefficients"] = nlohmann::json::array();
  for (const auto& z : map.coefficients) c.push_back({z.re, z.im});
  return j;
}

PolynomialConformalMap map_from_json(const nlohmann::json& j) {
  PolynomialConformalMap m;
  m.label = j.at("label").get<std::string>();
  for (const auto& c : j.at("coefficients"))
    m.coefficients.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
  return m;
}

}  // namespace sgb::confmap
