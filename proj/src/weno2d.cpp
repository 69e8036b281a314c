#include "lagrhd/weno2d.hpp"

#include <cmath>

#include "lagrhd/char_basis.hpp"

namespace lagrhd {

namespace {

inline Prim2 rotate_prim(const Prim2& v, const EdgeFrame& f) {
  return {v.rho, {dot(v.vel, f.normal), dot(v.vel, f.tangent)}, v.p};
}

} // namespace

Weno2DEdge weno2d_reconstruct(const Weno2DInput& in, const EdgeFrame& frame,
                              const std::array<Vec2, 3>& points, const GasModel& gas) {
  // pairs of cross neighbours forming the four corner stencils
  static const int stencil[4][2] = {{0, 2}, {1, 2}, {0, 3}, {1, 3}};

  Weno2DEdge out;
  const Cons2 u0r = rotate_state(in.u0, frame);
  const auto basis = char_basis_normal(rotate_prim(in.v0, frame), gas);

  std::array<std::array<double, 4>, 4> dw{};  // characteristic deviations per neighbour
  std::array<double, 4> dxi{}, deta{};
  std::array<bool, 4> have{};
  for (int c = 0; c < 4; ++c) {
    if (!in.nb[c]) continue;
    have[c] = true;
    dw[c] = basis.to_char(pack(rotate_state(*in.nb[c] - in.u0, frame)));
    const Vec2 d = in.nb_centroid[c] - in.centroid0;
    dxi[c] = dot(d, frame.normal);
    deta[c] = dot(d, frame.tangent);
  }

  std::array<std::array<double, 4>, 4> aq{}, bq{};  // [stencil][component]
  std::array<bool, 4> usable{};
  for (int q = 0; q < 4; ++q) {
    const int ca = stencil[q][0];
    const int cb = stencil[q][1];
    if (!have[ca] || !have[cb]) continue;
    const double det = dxi[ca] * deta[cb] - dxi[cb] * deta[ca];
    const double scale = (std::abs(dxi[ca]) + std::abs(deta[ca])) *
                         (std::abs(dxi[cb]) + std::abs(deta[cb]));
    if (!(std::abs(det) > 1e-12 * scale)) {
      ++out.singular_stencils;
      continue;
    }
    const double inv = 1.0 / det;
    usable[q] = true;
    for (int c = 0; c < 4; ++c) {
      aq[q][c] = (deta[cb] * dw[ca][c] - deta[ca] * dw[cb][c]) * inv;
      bq[q][c] = (dxi[ca] * dw[cb][c] - dxi[cb] * dw[ca][c]) * inv;
    }
  }

  // nonlinear weights per characteristic component, regularised relative to the
  // largest indicator so the blend is invariant under component rescaling
  std::array<double, 4> afin{}, bfin{};
  for (int c = 0; c < 4; ++c) {
    double beta[4], bmax = 0.0;
    for (int q = 0; q < 4; ++q) {
      beta[q] = usable[q] ? (aq[q][c] * aq[q][c] + bq[q][c] * bq[q][c]) * in.area0 : 0.0;
      bmax = std::max(bmax, beta[q]);
    }
    double wsum = 0.0, asum = 0.0, bsum = 0.0;
    for (int q = 0; q < 4; ++q) {
      if (!usable[q]) continue;
      const double den = beta[q] + in.eps_weno * bmax;
      const double w = (den > 0.0) ? 1.0 / (den * den) : 1.0;
      wsum += w;
      asum += w * aq[q][c];
      bsum += w * bq[q][c];
    }
    if (wsum > 0.0) {
      afin[c] = asum / wsum;
      bfin[c] = bsum / wsum;
    }
  }

  for (int a = 0; a < 3; ++a) {
    const Vec2 d = points[a] - in.centroid0;
    const double xi = dot(d, frame.normal);
    const double eta = dot(d, frame.tangent);
    std::array<double, 4> wpt;
    bool zero = true;
    for (int c = 0; c < 4; ++c) {
      wpt[c] = afin[c] * xi + bfin[c] * eta;
      zero = zero && wpt[c] == 0.0;
    }
    // constant data reproduces the average bitwise
    out.value[a] = zero ? in.u0 : rotate_back(unpack2(basis.from_char(wpt)) + u0r, frame);
  }
  return out;
}

} // namespace lagrhd
