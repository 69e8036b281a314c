#ifndef LAGRHD_GEOMETRY2D_HPP
#define LAGRHD_GEOMETRY2D_HPP

#include <array>
#include <vector>

#include "lagrhd/hllc.hpp"
#include "lagrhd/state.hpp"

namespace lagrhd {

struct Mesh2D {
  int nx = 0, ny = 0;
  std::vector<Vec2> vertex;  // (nx+1) * (ny+1), row-major in j
  std::vector<Cons2> avg;    // nx * ny
  double time = 0.0;

  int vidx(int i, int j) const { return j * (nx + 1) + i; }
  int cidx(int i, int j) const { return j * nx + i; }
  Vec2& v(int i, int j) { return vertex[vidx(i, j)]; }
  const Vec2& v(int i, int j) const { return vertex[vidx(i, j)]; }
  Cons2& cell(int i, int j) { return avg[cidx(i, j)]; }
  const Cons2& cell(int i, int j) const { return avg[cidx(i, j)]; }

  // corners counter-clockwise from the (i-1/2, j-1/2) vertex
  std::array<Vec2, 4> corners(int i, int j) const {
    return {v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)};
  }
};

double polygon_area(const std::array<Vec2, 4>& c);
Vec2 polygon_centroid(const std::array<Vec2, 4>& c);

// Bilinear map from the reference square [-1/2,1/2]^2 onto the quadrilateral.
Vec2 bilinear_map(const std::array<Vec2, 4>& c, double xh, double yh);
double bilinear_jacobian(const std::array<Vec2, 4>& c, double xh, double yh);

extern const std::array<double, 3> kSimpsonW;   // 1/6, 2/3, 1/6
extern const std::array<double, 3> kLobattoPt;  // -1/2, 0, 1/2

// Reference coordinates of edge point alpha on edge m (m = 0..3: bottom,
// right, top, left). Point order matches the shared edge of the neighbour cell.
std::array<double, 2> edge_ref_point(int m, int alpha);

// Per-cell Simpson quadrature data: the 3x3 Jacobians and the interior
// decomposition weights per edge.
struct CellQuadrature {
  std::array<std::array<double, 3>, 3> jac;  // jac[a][b] at (x_a, y_b)
  std::array<double, 4> omega_star;
  double area;

  double edge_jacobian(int m, int alpha) const;
};

CellQuadrature cell_quadrature(const std::array<Vec2, 4>& c);

// Geometry of one cell: area plus the four outward edge frames.
struct CellGeometry {
  double area;
  std::array<EdgeFrame, 4> edge;
};

CellGeometry cell_geometry(const Mesh2D& m, int i, int j);

} // namespace lagrhd

#endif
