#include "sgb/eigensolver.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sgb::eigensolver {

namespace {

double polygon_area(const Polygon& poly) {
  double a = 0.0;
  const size_t n = poly.size();
  for (size_t k = 0; k < n; ++k) {
    const auto& p = poly[k];
    const auto& q = poly[(k + 1) % n];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * std::abs(a);
}

// intersections of the polygon with the line {coord = c}; axis 0 means a
// vertical line x = c (returns y-values), axis 1 a horizontal line y = c.
std::vector<double> line_crossings(const Polygon& poly, int axis, double c) {
  std::vector<double> xs;
  const size_t n = poly.size();
  for (size_t k = 0; k < n; ++k) {
    const auto& p = poly[k];
    const auto& q = poly[(k + 1) % n];
    double a = p[axis], b = q[axis];
    if ((a <= c) == (b <= c)) continue;  // half-open rule, no double count
    double t = (c - a) / (b - a);
    xs.push_back(p[1 - axis] + t * (q[1 - axis] - p[1 - axis]));
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

// nearest crossing strictly ahead of `from` in direction `dir` among the
// sorted list; +inf when none within one step.
double arm_length(const std::vector<double>& xs, double from, int dir, double h) {
  if (dir > 0) {
    auto it = std::upper_bound(xs.begin(), xs.end(), from);
    if (it != xs.end() && *it - from <= h + 1e-12 * h) return *it - from;
  } else {
    auto it = std::lower_bound(xs.begin(), xs.end(), from);
    if (it != xs.begin() && from - *(--it) <= h + 1e-12 * h) return from - *it;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

GridMask build_mask(const Polygon& poly, double h) {
  if (poly.size() < 3) throw std::domain_error("build_mask: degenerate polygon");
  if (!(h > 0.0)) throw std::domain_error("build_mask: step must be positive");
  if (polygon_area(poly) < 10.0 * h * h)
    throw std::domain_error("build_mask: polygon area below 10 h^2");

  double xmin = poly[0][0], xmax = xmin, ymin = poly[0][1], ymax = ymin;
  for (const auto& p : poly) {
    xmin = std::min(xmin, p[0]); xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]); ymax = std::max(ymax, p[1]);
  }
  GridMask m;
  m.h = h;
  m.x0 = xmin - 2.0 * h;
  m.y0 = ymin - 2.0 * h;
  m.nx = static_cast<int>(std::ceil((xmax + 2.0 * h - m.x0) / h)) + 1;
  m.ny = static_cast<int>(std::ceil((ymax + 2.0 * h - m.y0) / h)) + 1;
  m.inside.assign(static_cast<size_t>(m.nx) * m.ny, 0);
  m.node_index.assign(static_cast<size_t>(m.nx) * m.ny, -1);

  m.row_crossings.resize(m.ny);
  m.col_crossings.resize(m.nx);
  for (int j = 0; j < m.ny; ++j)
    m.row_crossings[j] = line_crossings(poly, 1, m.y0 + j * h);
  for (int i = 0; i < m.nx; ++i)
    m.col_crossings[i] = line_crossings(poly, 0, m.x0 + i * h);

  // scanline parity along both axes: a node is inside iff an odd number
  // of crossings lie strictly before it on its row AND on its column;
  // nodes on a crossing (within 1e-12) count as outside (Dirichlet-safe,
  // catches nodes on axis-aligned boundary edges)
  auto strict_parity = [](const std::vector<double>& xs, double x, bool& on) {
    size_t lo = std::lower_bound(xs.begin(), xs.end(), x - 1e-12) - xs.begin();
    size_t hi = std::upper_bound(xs.begin(), xs.end(), x + 1e-12) - xs.begin();
    on = lo != hi;
    return (lo & 1) != 0;
  };
  int idx = 0;
  for (int j = 0; j < m.ny; ++j) {
    const auto& xs = m.row_crossings[j];
    double y = m.y0 + j * h;
    for (int i = 0; i < m.nx; ++i) {
      double x = m.x0 + i * h;
      bool on_row = false, on_col = false;
      bool row_odd = strict_parity(xs, x, on_row);
      bool col_odd = strict_parity(m.col_crossings[i], y, on_col);
      if (row_odd && col_odd && !on_row && !on_col) {
        m.inside[j * m.nx + i] = 1;
        m.node_index[j * m.nx + i] = idx++;
      }
    }
  }
  m.n_inside = idx;
  if (m.n_inside == 0) throw std::runtime_error("build_mask: no interior nodes");
  return m;
}

Eigen::SparseMatrix<double> assemble_laplacian(const GridMask& m) {
  const double ih2 = 1.0 / (m.h * m.h);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(m.n_inside) * 5);
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      int row = m.node_index[j * m.nx + i];
      if (row < 0) continue;
      trip.emplace_back(row, row, 4.0 * ih2);
      const int di[4] = {1, -1, 0, 0};
      const int dj[4] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        if (!m.is_inside(i + di[d], j + dj[d])) continue;
        trip.emplace_back(row, m.node_index[(j + dj[d]) * m.nx + i + di[d]], -ih2);
      }
    }
  Eigen::SparseMatrix<double> A(m.n_inside, m.n_inside);
  A.setFromTriplets(trip.begin(), trip.end());
  A.makeCompressed();
  return A;
}

Eigen::SparseMatrix<double> assemble_boundary_fitted(const GridMask& m) {
  const double h = m.h;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(m.n_inside) * 5);
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      int row = m.node_index[j * m.nx + i];
      if (row < 0) continue;
      const double x = m.x0 + i * h, y = m.y0 + j * h;
      // arm fractions theta in (0, 1]; a full arm ends at the neighbour,
      // a cut arm at the polygon crossing
      double t[4];  // E, W, N, S
      const int di[4] = {1, -1, 0, 0};
      const int dj[4] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        if (m.is_inside(i + di[d], j + dj[d])) {
          t[d] = 1.0;
          continue;
        }
        double arm = d < 2 ? arm_length(m.row_crossings[j], x, di[d], h)
                           : arm_length(m.col_crossings[i], y, dj[d], h);
        double theta = std::isfinite(arm) ? arm / h : 1.0;
        t[d] = std::clamp(theta, 1e-6, 1.0);
      }
      const double ih2 = 1.0 / (h * h);
      trip.emplace_back(row, row, (2.0 / (t[0] * t[1]) + 2.0 / (t[2] * t[3])) * ih2);
      for (int d = 0; d < 4; ++d) {
        int ni = i + di[d], nj = j + dj[d];
        if (!m.is_inside(ni, nj)) continue;  // Dirichlet: cut arm contributes 0
        double opp = t[d ^ 1];
        trip.emplace_back(row, m.node_index[nj * m.nx + ni],
                          -2.0 / (t[d] * (t[d] + opp)) * ih2);
      }
    }
  Eigen::SparseMatrix<double> A(m.n_inside, m.n_inside);
  A.setFromTriplets(trip.begin(), trip.end());
  A.makeCompressed();
  return A;
}

std::vector<double> smallest_eigenpairs(const Eigen::SparseMatrix<double>& A,
                                        int count) {
  const int n = static_cast<int>(A.rows());
  if (count < 1) throw std::domain_error("smallest_eigenpairs: count must be >= 1");
  const int block = std::min(n, count + 5);
  if (block < count)
    throw std::domain_error("smallest_eigenpairs: matrix too small for count");

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success)
    throw std::runtime_error("smallest_eigenpairs: LU factorisation failed");

  std::mt19937 rng(42);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd V(n, block);
  for (int j = 0; j < block; ++j)
    for (int i = 0; i < n; ++i) V(i, j) = gauss(rng);

  Eigen::MatrixXd prev_vals = Eigen::MatrixXd::Zero(block, 1);
  std::vector<double> out;
  const int max_sweeps = 500;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Eigen::MatrixXd W = lu.solve(V);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(W);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, block);
    // Ritz projection on the iterated subspace (A is not symmetric for the
    // boundary-fitted scheme, so project and take real parts)
    Eigen::MatrixXd H = Q.transpose() * (A * Q);
    Eigen::EigenSolver<Eigen::MatrixXd> es(H);
    std::vector<int> order(block);
    for (int k = 0; k < block; ++k) order[k] = k;
    auto re = [&](int k) { return es.eigenvalues()(k).real(); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return re(a) < re(b); });

    Eigen::MatrixXd Y(block, block);
    for (int k = 0; k < block; ++k)
      Y.col(k) = es.eigenvectors().col(order[k]).real();
    V = Q * Y;

    // convergence: residuals of the wanted Ritz pairs
    bool done = sweep > 2;
    if (done) {
      for (int k = 0; k < count && done; ++k) {
        Eigen::VectorXd v = V.col(k);
        double nv = v.norm();
        if (nv == 0.0) { done = false; break; }
        v /= nv;
        double lam = re(order[k]);
        double res = (A * v - lam * v).norm();
        if (res > 1e-8 * std::max(1.0, std::abs(lam))) done = false;
      }
    }
    if (done) {
      out.clear();
      for (int k = 0; k < count; ++k) out.push_back(re(order[k]));
      return out;
    }
  }
  std::ostringstream oss;
  oss << "smallest_eigenpairs: no convergence in " << max_sweeps
      << " sweeps (n=" << n << ", count=" << count << ")";
  throw std::runtime_error(oss.str());
}

SolveResult solve_domain(const Polygon& poly, double h, int count, bool refine,
                         Scheme scheme) {
  auto solve_at = [&](double step, int* nodes) {
    GridMask m = build_mask(poly, step);
    if (nodes) *nodes = m.n_inside;
    Eigen::SparseMatrix<double> A = scheme == Scheme::boundary_fitted
                                        ? assemble_boundary_fitted(m)
                                        : assemble_laplacian(m);
    return smallest_eigenpairs(A, count);
  };
  SolveResult r;
  r.h = h;
  r.values = solve_at(h, &r.n_nodes);
  if (refine) {
    r.refined = true;
    r.values_half = solve_at(0.5 * h, nullptr);
    r.band.resize(count);
    r.extrapolated.resize(count);
    for (int k = 0; k < count; ++k) {
      r.band[k] = std::abs(r.values[k] - r.values_half[k]);
      r.extrapolated[k] = (4.0 * r.values_half[k] - r.values[k]) / 3.0;
    }
  }
  return r;
}

}  // namespace sgb::eigensolver
