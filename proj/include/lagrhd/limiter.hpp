#ifndef LAGRHD_LIMITER_HPP
#define LAGRHD_LIMITER_HPP

#include <algorithm>
#include <span>

#include "lagrhd/errors.hpp"
#include "lagrhd/state.hpp"

namespace lagrhd {

// Scaling limiter: contracts point values toward the (admissible) cell average
// until the mass density and then q(U) clear the floor. The floor follows the
// cell scale, min(eps, average), so near-vacuum averages stay limitable.
// Returns {theta1, theta2}; values already satisfying the floors are left
// bitwise untouched.
template <int N>
std::array<double, 2> pcp_limit(const Conserved<N>& avg, std::span<Conserved<N>* const> vals,
                                double eps) {
  const double q_avg = q_margin(avg);
  if (!(avg.D > 0.0 && q_avg > 0.0))
    throw InadmissibleAverage("pcp_limit: inadmissible cell average");
  const double eps_d = std::min(eps, avg.D);
  const double eps_q = std::min(eps, q_avg);

  double d_min = avg.D;
  for (auto* v : vals) d_min = std::min(d_min, v->D);
  double theta1 = 1.0;
  if (d_min < eps_d) {
    theta1 = (avg.D - eps_d) / (avg.D - d_min);
    for (auto* v : vals) v->D = avg.D + theta1 * (v->D - avg.D);
  }

  double q_min = q_avg;
  for (auto* v : vals) q_min = std::min(q_min, q_margin(*v));
  double theta2 = 1.0;
  if (q_min < eps_q) {
    theta2 = (q_avg - eps_q) / (q_avg - q_min);
    for (auto* v : vals) *v = avg + theta2 * (*v - avg);
  }
  return {theta1, theta2};
}

} // namespace lagrhd

#endif
