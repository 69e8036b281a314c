#include "lagrhd/state.hpp"

#include <algorithm>
#include <cfloat>
#include <sstream>

namespace lagrhd {

double sound_speed_rho_p(double rho, double p, const GasModel& g) {
  return std::sqrt(g.gamma * p / (rho + g.gp() * p));
}

namespace {

struct PressureResidual {
  double D, msq, E, gp;

  // f(p) and f'(p); f increases through zero on the bracket.
  void eval(double p, double& f, double& df) const {
    const double w = E + p;
    const double s2 = (w - std::sqrt(msq)) * (w + std::sqrt(msq));
    const double s = std::sqrt(s2);
    const double gl = w / s;
    const double gl2 = w * w / s2;
    f = D * gl + gp * p * gl2 - w;
    df = -D * msq / (s2 * s) + gp * (gl2 - 2.0 * p * w * msq / (s2 * s2)) - 1.0;
  }
};

} // namespace

template <int N>
Primitive<N> cons_to_prim(const Conserved<N>& u, const GasModel& g,
                          std::optional<double> p_guess) {
  const double msq = u.mom2();
  const double mabs = std::sqrt(msq);

  double lo = std::max(0.0, mabs - u.E) * (1.0 + 1e-12) + 1e-300;
  double hi = u.E;
  {
    PressureResidual r{u.D, msq, u.E, g.gp()};
    double f, df;
    int expand = 0;
    r.eval(hi, f, df);
    while (f <= 0.0 && expand++ < 64) {
      hi *= 2.0;
      r.eval(hi, f, df);
    }
    if (f <= 0.0)
      throw NonConvergence("cons_to_prim: no bracket for the pressure equation");
  }

  PressureResidual r{u.D, msq, u.E, g.gp()};
  double p = (p_guess && *p_guess > lo && *p_guess < hi) ? *p_guess : 0.5 * (lo + hi);

  bool done = false;
  for (int it = 0; it < 200; ++it) {
    double f, df;
    r.eval(p, f, df);
    if (std::abs(f) <= 1e-14 * (u.E + p)) {
      done = true;
      break;
    }
    if (f > 0.0)
      hi = p;
    else
      lo = p;
    double pn = (df > 0.0) ? p - f / df : lo;
    if (!(pn > lo && pn < hi)) pn = 0.5 * (lo + hi);
    if (std::abs(pn - p) <= DBL_EPSILON * p) {
      p = pn;
      done = true;
      break;
    }
    p = pn;
  }
  if (!done) {
    std::ostringstream os;
    os << "cons_to_prim: pressure iteration exhausted (D=" << u.D << ", |m|=" << mabs
       << ", E=" << u.E << ")";
    throw NonConvergence(os.str());
  }

  const double w = u.E + p;
  Primitive<N> v;
  v.p = p;
  for (int k = 0; k < N; ++k) v.vel[k] = u.mom[k] / w;
  const double s = std::sqrt((w - mabs) * (w + mabs));
  v.rho = u.D * s / w;  // D / lorentz
  return v;
}

template Primitive<1> cons_to_prim<1>(const Conserved<1>&, const GasModel&, std::optional<double>);
template Primitive<2> cons_to_prim<2>(const Conserved<2>&, const GasModel&, std::optional<double>);

std::array<double, 2> eigen_speeds_normal(const Prim2& v, const GasModel& g, const Vec2& n) {
  const double cs2 = g.gamma * v.p / (v.rho + g.gp() * v.p);
  const double gl2 = 1.0 / (1.0 - v.vel2());
  const double sigma = cs2 / (gl2 * (1.0 - cs2));
  const double un = dot(v.vel, n);
  const double root = std::sqrt(sigma * (1.0 - un * un + sigma));
  return {(un - root) / (1.0 + sigma), (un + root) / (1.0 + sigma)};
}

double max_signal_speed(const Prim2& v, const GasModel& g) {
  const double cs2 = g.gamma * v.p / (v.rho + g.gp() * v.p);
  const double gl2 = 1.0 / (1.0 - v.vel2());
  const double sigma = cs2 / (gl2 * (1.0 - cs2));
  const double umag = std::sqrt(v.vel2());
  const double root = std::sqrt(sigma * (1.0 - umag * umag + sigma));
  return (umag + root) / (1.0 + sigma);
}

} // namespace lagrhd
