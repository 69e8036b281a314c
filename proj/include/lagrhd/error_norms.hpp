#ifndef LAGRHD_ERROR_NORMS_HPP
#define LAGRHD_ERROR_NORMS_HPP

#include <functional>

#include "lagrhd/problems.hpp"

namespace lagrhd {

struct ErrorNorms {
  double e1 = 0.0, e2 = 0.0, einf = 0.0;
};

// Cell averages of the exact solution (5-point Gauss per direction) differenced
// against the numerical averages; norms weighted by the moved cell measures.
ErrorNorms error_norms_1d(const Mesh1D& m, const std::function<Prim1(double, double)>& exact,
                          const GasModel& g);
ErrorNorms error_norms_2d(const Mesh2D& m,
                          const std::function<Prim2(const Vec2&, double)>& exact,
                          const GasModel& g);

struct ConvergenceRow {
  int n = 0;
  ErrorNorms err;
  double order1 = 0.0, order2 = 0.0, orderinf = 0.0;  // vs the previous row
  double theta_fraction = 0.0;
};

} // namespace lagrhd

#endif
