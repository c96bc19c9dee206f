#pragma once

#include <Eigen/Sparse>
#include <array>
#include <vector>

#include "sgb/confmap.hpp"

namespace sgb::eigensolver {

using confmap::Point;
using confmap::Polygon;

/// Rectangular grid with an inside/outside mask and, for the
/// boundary-fitted scheme, the grid-line crossings of the polygon.
struct GridMask {
  double h = 0.0;
  double x0 = 0.0, y0 = 0.0;  // node (i,j) sits at (x0 + i h, y0 + j h)
  int nx = 0, ny = 0;
  std::vector<char> inside;      // nx*ny, row-major j*nx+i
  std::vector<int> node_index;   // -1 outside, else equation number
  int n_inside = 0;
  // sorted crossing abscissae per horizontal line j and ordinates per
  // vertical line i (for shortened boundary arms)
  std::vector<std::vector<double>> row_crossings;  // size ny, x-values
  std::vector<std::vector<double>> col_crossings;  // size nx, y-values

  bool is_inside(int i, int j) const {
    return i >= 0 && i < nx && j >= 0 && j < ny && inside[j * nx + i];
  }
};

enum class Scheme { masked, boundary_fitted };

GridMask build_mask(const Polygon& poly, double h);

/// Masked 5-point Laplacian (Dirichlet outside): symmetric, first-order
/// accurate at a non-grid-aligned boundary.
Eigen::SparseMatrix<double> assemble_laplacian(const GridMask& mask);

/// Shortley-Weller boundary-fitted 5-point Laplacian: second-order,
/// non-symmetric near the boundary (arm lengths from the polygon
/// crossings, clamped below at 1e-6 h).
Eigen::SparseMatrix<double> assemble_boundary_fitted(const GridMask& mask);

/// Smallest `count` eigenvalues of A (sorted ascending) by block inverse
/// subspace iteration on a sparse LU factorisation, with a Ritz
/// projection so clustered/degenerate pairs converge as a subspace.
std::vector<double> smallest_eigenpairs(const Eigen::SparseMatrix<double>& A,
                                        int count);

struct SolveResult {
  std::vector<double> values;        // at step h
  std::vector<double> values_half;   // at h/2 (refine only)
  std::vector<double> extrapolated;  // order-2 Richardson (refine only)
  std::vector<double> band;          // |lambda(h) - lambda(h/2)|
  int n_nodes = 0;
  double h = 0.0;
  bool refined = false;
};

/// Dirichlet eigenvalues of the polygonal domain at grid step h; with
/// refine, also at h/2 plus Richardson extrapolation and a confidence
/// band from the two grids.
SolveResult solve_domain(const Polygon& poly, double h, int count, bool refine,
                         Scheme scheme = Scheme::boundary_fitted);

}  // namespace sgb::eigensolver
