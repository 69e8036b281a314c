#include "lagrhd/geometry2d.hpp"

#include <cmath>
#include <sstream>

namespace lagrhd {

const std::array<double, 3> kSimpsonW = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
const std::array<double, 3> kLobattoPt = {-0.5, 0.0, 0.5};

double polygon_area(const std::array<Vec2, 4>& c) {
  double s = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Vec2& a = c[k];
    const Vec2& b = c[(k + 1) % 4];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * s;
}

Vec2 polygon_centroid(const std::array<Vec2, 4>& c) {
  double s = 0.0, cx = 0.0, cy = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Vec2& a = c[k];
    const Vec2& b = c[(k + 1) % 4];
    const double w = a[0] * b[1] - b[0] * a[1];
    s += w;
    cx += (a[0] + b[0]) * w;
    cy += (a[1] + b[1]) * w;
  }
  const double inv = 1.0 / (3.0 * s);
  return {cx * inv, cy * inv};
}

Vec2 bilinear_map(const std::array<Vec2, 4>& c, double xh, double yh) {
  const double n0 = (0.5 - xh) * (0.5 - yh);
  const double n1 = (0.5 + xh) * (0.5 - yh);
  const double n2 = (0.5 + xh) * (0.5 + yh);
  const double n3 = (0.5 - xh) * (0.5 + yh);
  return {n0 * c[0][0] + n1 * c[1][0] + n2 * c[2][0] + n3 * c[3][0],
          n0 * c[0][1] + n1 * c[1][1] + n2 * c[2][1] + n3 * c[3][1]};
}

double bilinear_jacobian(const std::array<Vec2, 4>& c, double xh, double yh) {
  const double dx_xh = (0.5 - yh) * (c[1][0] - c[0][0]) + (0.5 + yh) * (c[2][0] - c[3][0]);
  const double dy_xh = (0.5 - yh) * (c[1][1] - c[0][1]) + (0.5 + yh) * (c[2][1] - c[3][1]);
  const double dx_yh = (0.5 - xh) * (c[3][0] - c[0][0]) + (0.5 + xh) * (c[2][0] - c[1][0]);
  const double dy_yh = (0.5 - xh) * (c[3][1] - c[0][1]) + (0.5 + xh) * (c[2][1] - c[1][1]);
  return dx_xh * dy_yh - dx_yh * dy_xh;
}

std::array<double, 2> edge_ref_point(int m, int alpha) {
  const double t = kLobattoPt[alpha];
  switch (m) {
    case 0: return {t, -0.5};
    case 1: return {0.5, t};
    case 2: return {t, 0.5};
    default: return {-0.5, t};
  }
}

double CellQuadrature::edge_jacobian(int m, int alpha) const {
  switch (m) {
    case 0: return jac[alpha][0];
    case 1: return jac[2][alpha];
    case 2: return jac[alpha][2];
    default: return jac[0][alpha];
  }
}

CellQuadrature cell_quadrature(const std::array<Vec2, 4>& c) {
  CellQuadrature q;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      q.jac[a][b] = bilinear_jacobian(c, kLobattoPt[a], kLobattoPt[b]);
  q.area = polygon_area(c);

  // interior weights: everything except the row of quadrature points on edge m
  auto sum_except = [&](int skip_axis, int skip_idx) {
    double s = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (skip_axis == 0 && a == skip_idx) continue;
        if (skip_axis == 1 && b == skip_idx) continue;
        s += kSimpsonW[a] * kSimpsonW[b] * q.jac[a][b];
      }
    return s;
  };
  q.omega_star[0] = sum_except(1, 0);
  q.omega_star[1] = sum_except(0, 2);
  q.omega_star[2] = sum_except(1, 2);
  q.omega_star[3] = sum_except(0, 0);
  return q;
}

CellGeometry cell_geometry(const Mesh2D& m, int i, int j) {
  const auto c = m.corners(i, j);
  CellGeometry g;
  g.area = polygon_area(c);
  if (!(g.area > 0.0)) {
    std::ostringstream os;
    os << "cell_geometry: nonpositive area " << g.area << " at cell (" << i << "," << j << ")";
    throw TangledCell(os.str());
  }
  // outward normals for counter-clockwise corner order
  for (int e = 0; e < 4; ++e) {
    const Vec2& a = c[e];
    const Vec2& b = c[(e + 1) % 4];
    const Vec2 ev = b - a;
    const double len = norm2(ev);
    if (len > 0.0)
      g.edge[e] = EdgeFrame::from_normal({ev[1] / len, -ev[0] / len}, len);
    else
      g.edge[e] = EdgeFrame{{0.0, 0.0}, {0.0, 0.0}, 0.0};
  }
  return g;
}

} // namespace lagrhd
