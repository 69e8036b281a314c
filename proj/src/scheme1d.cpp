#include "lagrhd/scheme1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lagrhd/char_basis.hpp"
#include "lagrhd/limiter.hpp"
#include "lagrhd/reconstruct1d.hpp"

namespace lagrhd {

void SchemeConfig1D::validate() const {
  if (order < 1 || order > 3) throw ParseError("order must be 1, 2 or 3");
  if (!(cfl > 0.0 && cfl <= 0.5)) throw ParseError("cfl number must lie in (0, 1/2]");
  if (!(eps_pcp > 0.0)) throw ParseError("limiter floor must be positive");
}

Solver1D::Solver1D(const GasModel& gas, const SchemeConfig1D& cfg) : gas_(gas), cfg_(cfg) {
  cfg_.validate();
}

GhostPad1D Solver1D::apply_boundary(const Mesh1D& m) const {
  const int n = m.size();
  GhostPad1D pad;
  pad.node.resize(n + 5);
  pad.avg.resize(n + 4);
  for (int i = 0; i <= n; ++i) pad.node[i + 2] = m.node[i];
  for (int i = 0; i < n; ++i) pad.avg[i + 2] = m.avg[i];

  auto mirror = [](const Cons1& u) { return Cons1{u.D, {-u.mom[0]}, u.E}; };

  switch (cfg_.boundary) {
    case Boundary1D::outflow:
      pad.avg[1] = m.avg[0];
      pad.avg[0] = m.avg[0];
      pad.avg[n + 2] = m.avg[n - 1];
      pad.avg[n + 3] = m.avg[n - 1];
      pad.node[1] = m.node[0] - m.width(0);
      pad.node[0] = pad.node[1] - m.width(0);
      pad.node[n + 3] = m.node[n] + m.width(n - 1);
      pad.node[n + 4] = pad.node[n + 3] + m.width(n - 1);
      break;
    case Boundary1D::reflective:
      pad.avg[1] = mirror(m.avg[0]);
      pad.avg[0] = mirror(m.avg[1]);
      pad.avg[n + 2] = mirror(m.avg[n - 1]);
      pad.avg[n + 3] = mirror(m.avg[n - 2]);
      pad.node[1] = 2.0 * m.node[0] - m.node[1];
      pad.node[0] = 2.0 * m.node[0] - m.node[2];
      pad.node[n + 3] = 2.0 * m.node[n] - m.node[n - 1];
      pad.node[n + 4] = 2.0 * m.node[n] - m.node[n - 2];
      break;
    case Boundary1D::periodic:
      pad.avg[1] = m.avg[n - 1];
      pad.avg[0] = m.avg[n - 2];
      pad.avg[n + 2] = m.avg[0];
      pad.avg[n + 3] = m.avg[1];
      pad.node[1] = m.node[0] - m.width(n - 1);
      pad.node[0] = pad.node[1] - m.width(n - 2);
      pad.node[n + 3] = m.node[n] + m.width(0);
      pad.node[n + 4] = pad.node[n + 3] + m.width(1);
      break;
  }
  return pad;
}

Recon1D Solver1D::reconstruct(const Mesh1D& m) const {
  const GhostPad1D pad = apply_boundary(m);
  const int n = m.size();
  const int cells = n + 2;  // padded cells 1 .. n+2
  Recon1D rec;
  rec.at_left.resize(cells);
  rec.at_right.resize(cells);
  rec.star.resize(cells);
  rec.limited.assign(cells, false);

  for (int k = 0; k < cells; ++k) {
    const int pc = k + 1;
    const Cons1& um = pad.avg[pc - 1];
    const Cons1& u0 = pad.avg[pc];
    const Cons1& up = pad.avg[pc + 1];

    const auto basis = char_basis(u0, gas_);
    const auto wm = basis.to_char(pack(um - u0));
    const auto wp = basis.to_char(pack(up - u0));

    const ReconGeom1D gm =
        recon_geom_1d(pad.node[pc - 1], pad.node[pc], pad.node[pc + 1], pad.node[pc + 2]);

    std::array<double, 3> dev_l{}, dev_r{};
    for (int c = 0; c < 3; ++c) {
      const auto v = (cfg_.order == 3)
                         ? weno3_point_values(gm, wm[c], 0.0, wp[c], cfg_.eps_weno)
                         : minmod_point_values(gm, wm[c], 0.0, wp[c]);
      dev_l[c] = v[0];
      dev_r[c] = v[1];
    }
    rec.at_left[k] = u0 + unpack1(basis.from_char(dev_l));
    rec.at_right[k] = u0 + unpack1(basis.from_char(dev_r));
    rec.star[k] = (1.0 / (1.0 - 2.0 * cfg_.omega1)) *
                  (u0 - cfg_.omega1 * rec.at_left[k] - cfg_.omega1 * rec.at_right[k]);

    std::array<Cons1*, 3> vals = {&rec.at_left[k], &rec.at_right[k], &rec.star[k]};
    const auto theta = pcp_limit<1>(u0, vals, cfg_.eps_pcp);
    rec.limited[k] = theta[0] < 1.0 || theta[1] < 1.0;
  }
  return rec;
}

Solver1D::StageResult Solver1D::stage_fluxes(const Mesh1D& m, StepStats1D& stats) {
  const int n = m.size();
  StageResult sr;
  sr.node_speed.resize(n + 1);
  sr.flux.resize(n + 1);

  std::vector<Cons1> ul(n + 1), ur(n + 1);
  if (cfg_.order == 1) {
    const GhostPad1D pad = apply_boundary(m);
    for (int j = 0; j <= n; ++j) {
      ul[j] = pad.avg[j + 1];
      ur[j] = pad.avg[j + 2];
    }
  } else {
    const Recon1D rec = reconstruct(m);
    for (int j = 0; j <= n; ++j) {
      ul[j] = rec.at_right[j];
      ur[j] = rec.at_left[j + 1];
    }
    for (int i = 0; i < n; ++i)
      if (rec.limited[i + 1]) {
        ++stats.limited_cells;
        limited_flag_[i] = 1;
      }
  }
  stats.cell_stage_instances += n;

  for (int j = 0; j <= n; ++j) {
    const Prim1 vl = cons_to_prim(ul[j], gas_);
    const Prim1 vr = cons_to_prim(ur[j], gas_);
    stats.min_rho = std::min({stats.min_rho, vl.rho, vr.rho});
    stats.min_p = std::min({stats.min_p, vl.p, vr.p});
    const WaveFan1 fan = hllc_flux(ul[j], vl, ur[j], vr, gas_);
    sr.node_speed[j] = fan.s_contact;
    sr.flux[j] = fan.flux;
  }
  return sr;
}

void Solver1D::euler_update(const Mesh1D& in, const StageResult& sr, double dt,
                            Mesh1D& out) const {
  const int n = in.size();
  out.node.resize(n + 1);
  out.avg.resize(n);
  for (int j = 0; j <= n; ++j) out.node[j] = in.node[j] + dt * sr.node_speed[j];
  for (int i = 0; i < n; ++i) {
    const double wx = out.node[i + 1] - out.node[i];
    Cons1 tot = in.width(i) * in.avg[i];
    for (int c = 0; c < 3; ++c) {
      const double df = sr.flux[i + 1][c] - sr.flux[i][c];
      if (c == 1) tot.mom[0] -= dt * df;
      if (c == 2) tot.E -= dt * df;
    }
    out.avg[i] = (1.0 / wx) * tot;
  }
}

void Solver1D::check_state(const Mesh1D& m, const char* where) {
  for (int i = 0; i < m.size(); ++i) {
    if (!(m.width(i) > 0.0)) {
      std::ostringstream os;
      os << where << ": mesh tangled at cell " << i << " (width " << m.width(i)
         << ", t=" << m.time << ")";
      throw TangledCell(os.str());
    }
    if (!admissible(m.avg[i])) {
      std::ostringstream os;
      os << where << ": inadmissible average at cell " << i << " (D=" << m.avg[i].D
         << ", q=" << q_margin(m.avg[i]) << ", t=" << m.time << ")";
      throw StepRejected(os.str());
    }
  }
}

double Solver1D::compute_dt(const Mesh1D& m) const {
  const int n = m.size();
  double dt = std::numeric_limits<double>::max();
  if (cfg_.order == 1) {
    for (int i = 0; i < n; ++i) {
      const Prim1 v = cons_to_prim(m.avg[i], gas_);
      const auto s = eigen_speeds1(v.vel[0], sound_speed(v, gas_));
      const double smax = std::max(std::abs(s[0]), std::abs(s[1]));
      dt = std::min(dt, m.width(i) / smax);
    }
    return cfg_.cfl * dt;
  }
  const Recon1D rec = reconstruct(m);
  for (int i = 0; i < n; ++i) {
    double smax = 0.0;
    for (const Cons1* u : {&rec.at_left[i + 1], &rec.at_right[i + 1]}) {
      const Prim1 v = cons_to_prim(*u, gas_);
      const auto s = eigen_speeds1(v.vel[0], sound_speed(v, gas_));
      smax = std::max({smax, std::abs(s[0]), std::abs(s[1])});
    }
    dt = std::min(dt, m.width(i) / smax);
  }
  return cfg_.cfl * cfg_.omega1 * dt;
}

StepStats1D Solver1D::step(Mesh1D& m, double dt) {
  StepStats1D stats;
  stats.min_rho = std::numeric_limits<double>::max();
  stats.min_p = std::numeric_limits<double>::max();
  const int n = m.size();
  limited_flag_.assign(n, 0);
  const double period = m.node[n] - m.node[0];

  auto sync_periodic = [&](Mesh1D& s) {
    if (cfg_.boundary == Boundary1D::periodic) s.node[n] = s.node[0] + period;
  };

  const Mesh1D m0 = m;
  Mesh1D s1, s2;

  const StageResult r0 = stage_fluxes(m0, stats);
  euler_update(m0, r0, dt, s1);
  s1.time = m0.time + dt;
  sync_periodic(s1);
  check_state(s1, "stage 1");
  ++stats.stages;

  if (cfg_.order == 1) {
    m = std::move(s1);
    return stats;
  }

  const StageResult r1 = stage_fluxes(s1, stats);
  ++stats.stages;

  if (cfg_.order == 2) {
    Mesh1D full;
    euler_update(s1, r1, dt, full);
    Mesh1D& out = m;
    for (int j = 0; j <= n; ++j) out.node[j] = 0.5 * m0.node[j] + 0.5 * full.node[j];
    sync_periodic(out);
    for (int i = 0; i < n; ++i) {
      const Cons1 tot = 0.5 * (m0.width(i) * m0.avg[i]) +
                        0.5 * ((full.node[i + 1] - full.node[i]) * full.avg[i]);
      out.avg[i] = (1.0 / (out.node[i + 1] - out.node[i])) * tot;
    }
    out.time = m0.time + dt;
    check_state(out, "stage 2");
    return stats;
  }

  // SSP-RK3
  {
    Mesh1D full;
    euler_update(s1, r1, dt, full);
    s2.node.resize(n + 1);
    s2.avg.resize(n);
    for (int j = 0; j <= n; ++j) s2.node[j] = 0.75 * m0.node[j] + 0.25 * full.node[j];
    sync_periodic(s2);
    for (int i = 0; i < n; ++i) {
      const Cons1 tot = 0.75 * (m0.width(i) * m0.avg[i]) +
                        0.25 * ((full.node[i + 1] - full.node[i]) * full.avg[i]);
      s2.avg[i] = (1.0 / (s2.node[i + 1] - s2.node[i])) * tot;
    }
    s2.time = m0.time + 0.5 * dt;
    check_state(s2, "stage 2");
  }

  const StageResult r2 = stage_fluxes(s2, stats);
  ++stats.stages;
  {
    Mesh1D full;
    euler_update(s2, r2, dt, full);
    Mesh1D& out = m;
    for (int j = 0; j <= n; ++j)
      out.node[j] = (1.0 / 3.0) * m0.node[j] + (2.0 / 3.0) * full.node[j];
    sync_periodic(out);
    for (int i = 0; i < n; ++i) {
      const Cons1 tot = (1.0 / 3.0) * (m0.width(i) * m0.avg[i]) +
                        (2.0 / 3.0) * ((full.node[i + 1] - full.node[i]) * full.avg[i]);
      out.avg[i] = (1.0 / (out.node[i + 1] - out.node[i])) * tot;
    }
    out.time = m0.time + dt;
    check_state(out, "stage 3");
  }
  return stats;
}

Cons1 godunov_average(const Cons1& left_neighbor, const Cons1& self,
                      const Cons1& right_neighbor, double xl, double xr, double dt,
                      const GasModel& g) {
  const WaveFan1 fl = hllc_flux(left_neighbor, self, g);
  const WaveFan1 fr = hllc_flux(self, right_neighbor, g);
  const double xl_new = xl + dt * fl.s_contact;
  const double xr_new = xr + dt * fr.s_contact;
  const double x1 = xl + dt * fl.s_right;  // right acoustic wave of the left fan
  const double x2 = xr + dt * fr.s_left;   // left acoustic wave of the right fan
  const Cons1 tot = (x1 - xl_new) * fl.star_right + (x2 - x1) * self +
                    (xr_new - x2) * fr.star_left;
  return (1.0 / (xr_new - xl_new)) * tot;
}

} // namespace lagrhd
