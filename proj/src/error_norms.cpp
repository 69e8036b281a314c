#include "lagrhd/error_norms.hpp"

#include <algorithm>
#include <cmath>

namespace lagrhd {

namespace {

const std::array<double, 5> kGaussNode = {-0.4530899229693320, -0.2692346550528415, 0.0,
                                          0.2692346550528415, 0.4530899229693320};
const std::array<double, 5> kGaussWeight = {0.1184634425280945, 0.2393143352496832,
                                            0.2844444444444444, 0.2393143352496832,
                                            0.1184634425280945};

} // namespace

ErrorNorms error_norms_1d(const Mesh1D& m, const std::function<Prim1(double, double)>& exact,
                          const GasModel& g) {
  ErrorNorms n;
  for (int i = 0; i < m.size(); ++i) {
    const double xc = 0.5 * (m.node[i] + m.node[i + 1]);
    const double w = m.width(i);
    Cons1 acc{0.0, {0.0}, 0.0};
    for (int q = 0; q < 5; ++q)
      acc = acc + kGaussWeight[q] * prim_to_cons(exact(xc + kGaussNode[q] * w, m.time), g);
    const Cons1 d = acc - m.avg[i];
    const double a1 = std::abs(d.D) + std::abs(d.mom[0]) + std::abs(d.E);
    const double a2 = d.D * d.D + d.mom[0] * d.mom[0] + d.E * d.E;
    const double ai = std::max({std::abs(d.D), std::abs(d.mom[0]), std::abs(d.E)});
    n.e1 += a1 * w;
    n.e2 += a2 * w;
    n.einf = std::max(n.einf, ai);
  }
  n.e2 = std::sqrt(n.e2);
  return n;
}

ErrorNorms error_norms_2d(const Mesh2D& m,
                          const std::function<Prim2(const Vec2&, double)>& exact,
                          const GasModel& g) {
  ErrorNorms n;
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const auto corners = m.corners(i, j);
      Cons2 acc{0.0, {0.0, 0.0}, 0.0};
      double wsum = 0.0;
      for (int qa = 0; qa < 5; ++qa)
        for (int qb = 0; qb < 5; ++qb) {
          const double jw = bilinear_jacobian(corners, kGaussNode[qa], kGaussNode[qb]);
          const double w = kGaussWeight[qa] * kGaussWeight[qb] * jw;
          const Vec2 x = bilinear_map(corners, kGaussNode[qa], kGaussNode[qb]);
          acc = acc + w * prim_to_cons(exact(x, m.time), g);
          wsum += w;
        }
      const Cons2 d = (1.0 / wsum) * acc - m.cell(i, j);
      const double a1 =
          std::abs(d.D) + std::abs(d.mom[0]) + std::abs(d.mom[1]) + std::abs(d.E);
      const double a2 =
          d.D * d.D + d.mom[0] * d.mom[0] + d.mom[1] * d.mom[1] + d.E * d.E;
      const double ai = std::max({std::abs(d.D), std::abs(d.mom[0]), std::abs(d.mom[1]),
                                  std::abs(d.E)});
      n.e1 += a1 * wsum;
      n.e2 += a2 * wsum;
      n.einf = std::max(n.einf, ai);
    }
  n.e2 = std::sqrt(n.e2);
  return n;
}

} // namespace lagrhd
