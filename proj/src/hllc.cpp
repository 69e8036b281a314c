#include "lagrhd/hllc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lagrhd {

std::array<double, 2> wave_speed_bounds(const Prim1& vl, const Prim1& vr, const GasModel& g) {
  const auto l = eigen_speeds1(vl.vel[0], sound_speed(vl, g));
  const auto r = eigen_speeds1(vr.vel[0], sound_speed(vr, g));
  return {std::min(l[0], r[0]), std::max(l[1], r[1])};
}

std::array<double, 2> wave_speed_bounds(const Cons1& ul, const Cons1& ur, const GasModel& g) {
  return wave_speed_bounds(cons_to_prim(ul, g), cons_to_prim(ur, g), g);
}

std::array<double, 2> wave_speed_bounds_normal(const Prim2& vl, const Prim2& vr,
                                               const GasModel& g) {
  const Vec2 ex{1.0, 0.0};
  const auto l = eigen_speeds_normal(vl, g, ex);
  const auto r = eigen_speeds_normal(vr, g, ex);
  return {std::min(l[0], r[0]), std::max(l[1], r[1])};
}

std::array<double, 2> contact_solve(double a_minus, double a_plus, double b_minus,
                                    double b_plus, double s_minus, double s_plus,
                                    HllcCoefficients* coef_out) {
  const double c0 = b_plus - b_minus;
  const double c1 = a_minus + s_plus * b_minus - a_plus - s_minus * b_plus;
  const double c2 = s_minus * a_plus - s_plus * a_minus;
  if (coef_out) *coef_out = {a_minus, a_plus, b_minus, b_plus, c0, c1, c2};

  double s_star;
  if (std::abs(c2) <= 1e-14 * std::max({std::abs(c0), std::abs(c1), 1.0})) {
    s_star = (c1 != 0.0) ? -c0 / c1 : 0.0;
  } else {
    const double disc = std::max(c1 * c1 - 4.0 * c0 * c2, 0.0);
    const double sq = std::sqrt(disc);
    // both branches evaluate the same (physical) root of the quadratic
    s_star = (c1 >= 0.0) ? (-c1 - sq) / (2.0 * c2) : 2.0 * c0 / (-c1 + sq);
  }

  const double dm = 1.0 - s_minus * s_star;
  const double dp = 1.0 - s_plus * s_star;
  const double p_star = (std::abs(dm) >= std::abs(dp))
                            ? (s_star * a_minus - b_minus) / dm
                            : (s_star * a_plus - b_plus) / dp;

  // p_star can legitimately go negative for strong receding flows over
  // near-vacuum pressure; the intermediate states stay admissible regardless.
  if (!(s_minus < s_star && s_star < s_plus && std::abs(s_star) < 1.0)) {
    std::ostringstream os;
    os << "contact_solve: fan ordering violated (s-=" << s_minus << " s*=" << s_star
       << " s+=" << s_plus << ")";
    throw InternalSolverError(os.str());
  }
  return {s_star, p_star};
}

Cons1 intermediate_state_1d(const Cons1& u, double p, double uvel, double s, double s_star,
                            double p_star) {
  const double rel = s - uvel;
  const double inv = 1.0 / (s - s_star);
  Cons1 star;
  star.D = u.D * rel * inv;
  star.mom[0] = (u.mom[0] * rel + p_star - p) * inv;
  star.E = (u.E * rel + p_star * s_star - p * uvel) * inv;
  return star;
}

WaveFan1 hllc_flux(const Cons1& ul, const Prim1& vl, const Cons1& ur, const Prim1& vr,
                   const GasModel& g) {
  WaveFan1 fan;
  if (ul.D == ur.D && ul.mom[0] == ur.mom[0] && ul.E == ur.E) {
    const auto s = eigen_speeds1(vl.vel[0], sound_speed(vl, g));
    fan.s_left = s[0];
    fan.s_right = s[1];
    fan.s_contact = vl.vel[0];
    fan.p_contact = vl.p;
    fan.star_left = ul;
    fan.star_right = ul;
    fan.flux = {0.0, vl.p, vl.p * vl.vel[0]};
    fan.coef = {};
    return fan;
  }

  const auto s = wave_speed_bounds(vl, vr, g);
  const double am = s[0] * ul.E - ul.mom[0];
  const double ap = s[1] * ur.E - ur.mom[0];
  const double bm = ul.mom[0] * (s[0] - vl.vel[0]) - vl.p;
  const double bp = ur.mom[0] * (s[1] - vr.vel[0]) - vr.p;
  const auto c = contact_solve(am, ap, bm, bp, s[0], s[1], &fan.coef);

  fan.s_left = s[0];
  fan.s_right = s[1];
  fan.s_contact = c[0];
  fan.p_contact = c[1];
  fan.star_left = intermediate_state_1d(ul, vl.p, vl.vel[0], s[0], c[0], c[1]);
  fan.star_right = intermediate_state_1d(ur, vr.p, vr.vel[0], s[1], c[0], c[1]);
  fan.flux = {0.0, c[1], c[1] * c[0]};
  return fan;
}

WaveFan1 hllc_flux(const Cons1& ul, const Cons1& ur, const GasModel& g) {
  return hllc_flux(ul, cons_to_prim(ul, g), ur, cons_to_prim(ur, g), g);
}

Cons2 rotate_state(const Cons2& u, const EdgeFrame& f) {
  return {u.D, {dot(u.mom, f.normal), dot(u.mom, f.tangent)}, u.E};
}

Cons2 rotate_back(const Cons2& u, const EdgeFrame& f) {
  return {u.D,
          {u.mom[0] * f.normal[0] + u.mom[1] * f.tangent[0],
           u.mom[0] * f.normal[1] + u.mom[1] * f.tangent[1]},
          u.E};
}

WaveFan2 hllc_flux_normal_rotated(const Cons2& ul_rot, const Prim2& vl_rot,
                                  const Cons2& ur_rot, const Prim2& vr_rot,
                                  const EdgeFrame& f, const GasModel& g) {
  WaveFan2 fan;
  fan.ut_left = vl_rot.vel[1];
  fan.ut_right = vr_rot.vel[1];

  if (ul_rot.D == ur_rot.D && ul_rot.mom[0] == ur_rot.mom[0] &&
      ul_rot.mom[1] == ur_rot.mom[1] && ul_rot.E == ur_rot.E) {
    const auto s = eigen_speeds_normal(vl_rot, g, {1.0, 0.0});
    fan.s_left = s[0];
    fan.s_right = s[1];
    fan.s_contact = vl_rot.vel[0];
    fan.p_contact = vl_rot.p;
    fan.star_left = ul_rot;
    fan.star_right = ul_rot;
    fan.flux_global = {0.0, vl_rot.p * f.normal[0], vl_rot.p * f.normal[1],
                       vl_rot.p * vl_rot.vel[0]};
    fan.coef = {};
    return fan;
  }

  const auto s = wave_speed_bounds_normal(vl_rot, vr_rot, g);
  const double am = s[0] * ul_rot.E - ul_rot.mom[0];
  const double ap = s[1] * ur_rot.E - ur_rot.mom[0];
  const double bm = ul_rot.mom[0] * (s[0] - vl_rot.vel[0]) - vl_rot.p;
  const double bp = ur_rot.mom[0] * (s[1] - vr_rot.vel[0]) - vr_rot.p;
  const auto c = contact_solve(am, ap, bm, bp, s[0], s[1], &fan.coef);

  fan.s_left = s[0];
  fan.s_right = s[1];
  fan.s_contact = c[0];
  fan.p_contact = c[1];

  auto star = [&](const Cons2& u, const Prim2& v, double sw) {
    const double rel = sw - v.vel[0];
    const double inv = 1.0 / (sw - c[0]);
    Cons2 st;
    st.D = u.D * rel * inv;
    st.mom[0] = (u.mom[0] * rel + c[1] - v.p) * inv;
    st.mom[1] = u.mom[1] * rel * inv;
    st.E = (u.E * rel + c[1] * c[0] - v.p * v.vel[0]) * inv;
    return st;
  };
  fan.star_left = star(ul_rot, vl_rot, s[0]);
  fan.star_right = star(ur_rot, vr_rot, s[1]);
  fan.flux_global = {0.0, c[1] * f.normal[0], c[1] * f.normal[1], c[1] * c[0]};
  return fan;
}

WaveFan2 hllc_flux_normal(const Cons2& ul, const Cons2& ur, const EdgeFrame& f,
                          const GasModel& g) {
  const Cons2 ulr = rotate_state(ul, f);
  const Cons2 urr = rotate_state(ur, f);
  return hllc_flux_normal_rotated(ulr, cons_to_prim(ulr, g), urr, cons_to_prim(urr, g), f, g);
}

} // namespace lagrhd
