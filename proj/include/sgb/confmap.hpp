#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace sgb::confmap {

/// Complex numbers kept as explicit real pairs.
struct Complex {
  double re = 0.0;
  double im = 0.0;

  friend Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(Complex a, Complex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(double s, Complex a) { return {s * a.re, s * a.im}; }
  double abs2() const { return re * re + im * im; }
  double abs() const;
};

using Point = std::array<double, 2>;
using Polygon = std::vector<Point>;

/// phi(z) = sum_j c_j z^j on the closed unit disc. Maps are immutable
/// after construction.
struct PolynomialConformalMap {
  std::vector<Complex> coefficients;  // c_0 .. c_m
  std::string label;
  int epicycloid_n = 0;  // set by epicycloid_map, 0 otherwise

  Complex eval(Complex z) const;
  Complex deriv(Complex z) const;  // phi'(z)
};

/// phi(z) = sqrt(n/(n+1)) (z + z^n / n): epicycloid of (n-1) cusps, area pi.
PolynomialConformalMap epicycloid_map(int n);

/// psi(z) = z + z^k / k together with the scaling t = k^2/(k-1)^2 for
/// which the unit disc is contained in t * psi(D).
struct Section4Map {
  PolynomialConformalMap map;
  double t = 0.0;
};
Section4Map section4_map(int k);

/// ||phi'||_{L^alpha(D)} for alpha > 2 (tensor Gauss-Legendre x trapezoid
/// quadrature with automatic refinement) or alpha = inf (boundary max of
/// |phi'| by dense sampling plus golden-section polish).
double derivative_norm(const PolynomialConformalMap& map, double alpha);

/// Fixed-resolution quadrature of ||phi'||_{L^alpha(D)} (test oracle surface).
double lp_norm_quadrature(const PolynomialConformalMap& map, double alpha,
                          int radial_nodes, int angular_nodes);

/// ||phi' - 1||_{L^2(D)} in closed form from the coefficients.
double deviation_norm_l2(const PolynomialConformalMap& map);

/// Same quantity by quadrature (independent route for tests).
double deviation_l2_quadrature(const PolynomialConformalMap& map,
                               int radial_nodes, int angular_nodes);

/// |Omega| = ||phi'||^2_{L^2(D)} = pi * sum_j j |c_j|^2.
double area(const PolynomialConformalMap& map);

/// Upper bound on V_alpha^0(D, Omega) from the single witness map:
/// (||phi'||_alpha + pi^{1/alpha}) * ||phi' - 1||_2.
double variation_upper_bound(const PolynomialConformalMap& map, double alpha);

enum class InradiusMode { closed_form, numeric };

/// Inscribed radius. closed_form mode: ((n-1)/(n+1))^{3/4}, epicycloid maps only.
/// numeric mode: max over an interior grid of the distance to the boundary
/// polygon (resolution-controlled lower estimate).
double inscribed_radius(const PolynomialConformalMap& map, InradiusMode mode);

/// phi(e^{2 pi i j / samples}), j = 0..samples-1; closed, positively oriented.
Polygon boundary_polygon(const PolynomialConformalMap& map, int samples);

/// true iff a dense sample of the closed unit disc lies inside the polygon
/// of t * Omega.
bool check_disc_containment(const PolynomialConformalMap& map, double t);

/// Argument-principle count of zeros of phi' inside |z| <= 1 - 1e-6.
/// Zero for a locally conformal map.
int derivative_zero_count(const PolynomialConformalMap& map);

/// Point-in-polygon, even-odd rule (nodes on edges count as outside).
bool point_in_polygon(const Polygon& poly, double x, double y);

nlohmann::json map_to_json(const PolynomialConformalMap& map);
PolynomialConformalMap map_from_json(const nlohmann::json& j);

}  // namespace sgb::confmap
