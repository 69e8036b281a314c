#ifndef LAGRHD_STATE_HPP
#define LAGRHD_STATE_HPP

#include <array>
#include <cmath>
#include <optional>

#include "lagrhd/errors.hpp"

namespace lagrhd {

// Ideal-gas closure. Units with c = 1 throughout.
struct GasModel {
  double gamma;

  explicit GasModel(double gamma_) : gamma(gamma_) {
    if (!(gamma > 1.0 && gamma <= 2.0))
      throw DegenerateState("GasModel: adiabatic index must lie in (1, 2]");
  }
  // gamma/(gamma-1), the enthalpy prefactor
  double gp() const { return gamma / (gamma - 1.0); }
};

using Vec2 = std::array<double, 2>;

inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm2(const Vec2& a) { return std::sqrt(dot(a, a)); }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator*(double s, const Vec2& a) { return {s * a[0], s * a[1]}; }

template <int N>
struct Primitive {
  static_assert(N == 1 || N == 2);
  double rho;
  std::array<double, N> vel;
  double p;

  double vel2() const {
    double s = 0;
    for (int k = 0; k < N; ++k) s += vel[k] * vel[k];
    return s;
  }
  double lorentz() const { return 1.0 / std::sqrt(1.0 - vel2()); }
  bool valid() const { return rho > 0.0 && p > 0.0 && vel2() < 1.0; }
};

template <int N>
struct Conserved {
  static_assert(N == 1 || N == 2);
  double D;
  std::array<double, N> mom;
  double E;

  double mom2() const {
    double s = 0;
    for (int k = 0; k < N; ++k) s += mom[k] * mom[k];
    return s;
  }
};

using Prim1 = Primitive<1>;
using Prim2 = Primitive<2>;
using Cons1 = Conserved<1>;
using Cons2 = Conserved<2>;

template <int N>
inline Conserved<N> operator+(const Conserved<N>& a, const Conserved<N>& b) {
  Conserved<N> r;
  r.D = a.D + b.D;
  for (int k = 0; k < N; ++k) r.mom[k] = a.mom[k] + b.mom[k];
  r.E = a.E + b.E;
  return r;
}
template <int N>
inline Conserved<N> operator-(const Conserved<N>& a, const Conserved<N>& b) {
  Conserved<N> r;
  r.D = a.D - b.D;
  for (int k = 0; k < N; ++k) r.mom[k] = a.mom[k] - b.mom[k];
  r.E = a.E - b.E;
  return r;
}
template <int N>
inline Conserved<N> operator*(double s, const Conserved<N>& a) {
  Conserved<N> r;
  r.D = s * a.D;
  for (int k = 0; k < N; ++k) r.mom[k] = s * a.mom[k];
  r.E = s * a.E;
  return r;
}

// q(U) = E - sqrt(D^2 + |m|^2); positive exactly on the admissible set (with D > 0).
template <int N>
inline double q_margin(const Conserved<N>& u) {
  return u.E - std::sqrt(u.D * u.D + u.mom2());
}

template <int N>
inline bool admissible(const Conserved<N>& u) {
  return u.D > 0.0 && q_margin(u) > 0.0;
}

template <int N>
Conserved<N> prim_to_cons(const Primitive<N>& v, const GasModel& g) {
  const double w = v.rho + g.gp() * v.p;  // rho*h
  const double gl2 = 1.0 / (1.0 - v.vel2());
  const double gl = std::sqrt(gl2);
  Conserved<N> u;
  u.D = v.rho * gl;
  for (int k = 0; k < N; ++k) u.mom[k] = w * gl2 * v.vel[k];
  u.E = w * gl2 - v.p;
  return u;
}

// Inverts prim_to_cons by solving the pressure equation
//   E + p = D*gl + gamma/(gamma-1) * p * gl^2,  gl = (E+p)/sqrt((E+p)^2 - |m|^2),
// with Newton iteration safeguarded by bisection on p in (max(0,|m|-E), E).
// The residual is monotone increasing on that bracket for admissible input.
template <int N>
Primitive<N> cons_to_prim(const Conserved<N>& u, const GasModel& g,
                          std::optional<double> p_guess = std::nullopt);

double sound_speed_rho_p(double rho, double p, const GasModel& g);

template <int N>
inline double sound_speed(const Primitive<N>& v, const GasModel& g) {
  return sound_speed_rho_p(v.rho, v.p, g);
}

// 1D acoustic eigenvalue bounds (u -+ c)/(1 -+ c u).
inline std::array<double, 2> eigen_speeds1(double u, double cs) {
  return {(u - cs) / (1.0 - cs * u), (u + cs) / (1.0 + cs * u)};
}

template <int N>
inline std::array<double, 2> eigen_speeds(const Primitive<N>& v, const GasModel& g) {
  static_assert(N == 1);
  return eigen_speeds1(v.vel[0], sound_speed(v, g));
}

// Normal-direction bounds for the split 2D system; the Lorentz factor couples the
// tangential velocity through sigma = cs^2 / (gl^2 (1 - cs^2)).
std::array<double, 2> eigen_speeds_normal(const Prim2& v, const GasModel& g, const Vec2& n);

// Direction-independent bound on |s| used in time-step estimates.
double max_signal_speed(const Prim2& v, const GasModel& g);

} // namespace lagrhd

#endif
