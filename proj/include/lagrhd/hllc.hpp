#ifndef LAGRHD_HLLC_HPP
#define LAGRHD_HLLC_HPP

#include <array>

#include "lagrhd/state.hpp"

namespace lagrhd {

// A^{+-} = s E - m_n and B^{+-} = m_n (s - u_n) - p together with the quadratic
// coefficients of the contact-speed equation c0 + c1 s + c2 s^2 = 0.
struct HllcCoefficients {
  double a_minus, a_plus;
  double b_minus, b_plus;
  double c0, c1, c2;
};

// Contact-frame HLLC fan for the 1D system. The Lagrangian numerical flux is
// (0, p*, p* s*); both intermediate states are admissible for admissible inputs.
struct WaveFan1 {
  double s_left, s_right;
  double s_contact, p_contact;
  Cons1 star_left, star_right;
  std::array<double, 3> flux;
  HllcCoefficients coef;
};

struct EdgeFrame {
  Vec2 normal;   // unit outward normal
  Vec2 tangent;  // normal rotated +90 degrees: (-n_y, n_x)
  double length;

  static EdgeFrame from_normal(const Vec2& n, double len) {
    return {n, {-n[1], n[0]}, len};
  }
};

// Fan for the normal-split 2D system. Intermediate states are stored in the
// rotated (m_n, m_tau) frame; the flux is already rotated back to global axes.
struct WaveFan2 {
  double s_left, s_right;
  double s_contact, p_contact;
  Cons2 star_left, star_right;       // rotated frame
  std::array<double, 4> flux_global;  // (0, p* n_x, p* n_y, p* s*)
  double ut_left, ut_right;           // tangential fluid velocities of the two sides
  HllcCoefficients coef;
};

std::array<double, 2> wave_speed_bounds(const Prim1& vl, const Prim1& vr, const GasModel& g);
std::array<double, 2> wave_speed_bounds(const Cons1& ul, const Cons1& ur, const GasModel& g);

// Rotated-frame bounds for the split 2D system (mom[0] normal, mom[1] tangential).
std::array<double, 2> wave_speed_bounds_normal(const Prim2& vl, const Prim2& vr,
                                               const GasModel& g);

// Solves the contact quadratic in the cancellation-safe form and returns
// (s*, p*); p* is taken from the better-conditioned of the two equal expressions.
std::array<double, 2> contact_solve(double a_minus, double a_plus, double b_minus,
                                    double b_plus, double s_minus, double s_plus,
                                    HllcCoefficients* coef_out = nullptr);

Cons1 intermediate_state_1d(const Cons1& u, double p, double uvel, double s, double s_star,
                            double p_star);

WaveFan1 hllc_flux(const Cons1& ul, const Prim1& vl, const Cons1& ur, const Prim1& vr,
                   const GasModel& g);
WaveFan1 hllc_flux(const Cons1& ul, const Cons1& ur, const GasModel& g);

Cons2 rotate_state(const Cons2& u, const EdgeFrame& f);
Cons2 rotate_back(const Cons2& u, const EdgeFrame& f);

WaveFan2 hllc_flux_normal(const Cons2& ul, const Cons2& ur, const EdgeFrame& f,
                          const GasModel& g);
WaveFan2 hllc_flux_normal_rotated(const Cons2& ul_rot, const Prim2& vl_rot,
                                  const Cons2& ur_rot, const Prim2& vr_rot,
                                  const EdgeFrame& f, const GasModel& g);

} // namespace lagrhd

#endif
