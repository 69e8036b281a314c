#ifndef LAGRHD_WENO2D_HPP
#define LAGRHD_WENO2D_HPP

#include <array>

#include "lagrhd/geometry2d.hpp"
#include "lagrhd/hllc.hpp"
#include "lagrhd/state.hpp"

namespace lagrhd {

// Cross-stencil data around one cell. Neighbour order: +i, -i, +j, -j;
// a null entry marks a missing neighbour (degenerate mesh column).
struct Weno2DInput {
  Cons2 u0;
  Prim2 v0;
  Vec2 centroid0;
  double area0;
  std::array<const Cons2*, 4> nb;
  std::array<Vec2, 4> nb_centroid;
  double eps_weno;
};

struct Weno2DEdge {
  std::array<Cons2, 3> value;  // inside limit values at the three edge points
  int singular_stencils = 0;
};

// Four-stencil linear WENO on characteristic variables of the edge-normal
// frame, evaluated at the given physical edge points.
Weno2DEdge weno2d_reconstruct(const Weno2DInput& in, const EdgeFrame& frame,
                              const std::array<Vec2, 3>& points, const GasModel& gas);

} // namespace lagrhd

#endif
