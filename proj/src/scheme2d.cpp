#include "lagrhd/scheme2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lagrhd/limiter.hpp"
#include "lagrhd/parallel.hpp"
#include "lagrhd/weno2d.hpp"

namespace lagrhd {

namespace {

constexpr int kLeft = 0, kRight = 1, kBottom = 2, kTop = 3;

inline Vec2 reflect_point(const Vec2& p, const WallLine& w) {
  const double d = (p[0] - w.point[0]) * w.normal[0] + (p[1] - w.point[1]) * w.normal[1];
  return {p[0] - 2.0 * d * w.normal[0], p[1] - 2.0 * d * w.normal[1]};
}

inline Cons2 mirror_state(const Cons2& u, const Vec2& w) {
  const double d = dot(u.mom, w);
  return {u.D, {u.mom[0] - 2.0 * d * w[0], u.mom[1] - 2.0 * d * w[1]}, u.E};
}

inline Prim2 mirror_prim(const Prim2& v, const Vec2& w) {
  const double d = dot(v.vel, w);
  return {v.rho, {v.vel[0] - 2.0 * d * w[0], v.vel[1] - 2.0 * d * w[1]}, v.p};
}

inline Prim2 rotate_prim(const Prim2& v, const EdgeFrame& f) {
  return {v.rho, {dot(v.vel, f.normal), dot(v.vel, f.tangent)}, v.p};
}

} // namespace

void SchemeConfig2D::validate() const {
  if (order < 1 || order > 2) throw ParseError("2D order must be 1 or 2");
  if (!(cfl > 0.0 && cfl <= 0.5)) throw ParseError("cfl number must lie in (0, 1/2]");
  if (!(eps_pcp > 0.0)) throw ParseError("limiter floor must be positive");
}

Solver2D::Solver2D(const GasModel& gas, const SchemeConfig2D& cfg, const BoundaryConfig2D& bc)
    : gas_(gas), cfg_(cfg), bc_(bc) {
  cfg_.validate();
}

void Solver2D::prepare(const Mesh2D& m, StepStats2D& stats) {
  nx_ = m.nx;
  ny_ = m.ny;
  const int cells = nx_ * ny_;
  const int pw = nx_ + 2;
  const int ph = ny_ + 2;
  pad_u_.resize(pw * ph);
  pad_v_.resize(pw * ph);
  pad_c_.resize(pw * ph);
  pad_ok_.assign(pw * ph, 0);
  quad_.resize(cells);
  geom_.resize(cells);
  cell_sig_.resize(cells);
  cell_dtlen_.resize(cells);
  if ((int)warm_p_.size() != cells) warm_p_.assign(cells, -1.0);
  if (cfg_.order == 2) {
    vals_.resize(cells * 12);
    valv_.resize(cells * 12);
  }

  auto pidx = [pw](int i, int j) { return (j + 1) * pw + (i + 1); };

  parallel_for(cells, [&](int c) {
    const int i = c % nx_;
    const int j = c / nx_;
    const auto corners = m.corners(i, j);
    geom_[c] = cell_geometry(m, i, j);
    quad_[c] = cell_quadrature(corners);
    const int p = pidx(i, j);
    pad_u_[p] = m.avg[c];
    std::optional<double> guess;
    if (warm_p_[c] > 0.0) guess = warm_p_[c];
    pad_v_[p] = cons_to_prim(m.avg[c], gas_, guess);
    warm_p_[c] = pad_v_[p].p;
    pad_c_[p] = polygon_centroid(corners);
    pad_ok_[p] = 1;
  });

  for (int c = 0; c < cells; ++c) {
    stats.min_rho = std::min(stats.min_rho, pad_v_[pidx(c % nx_, c / nx_)].rho);
    stats.min_p = std::min(stats.min_p, pad_v_[pidx(c % nx_, c / nx_)].p);
  }

  // ghost ring
  auto fill_ghost = [&](int side, int gi, int gj, int ii, int ij, const Vec2& edge_a,
                        const Vec2& edge_b) {
    const int gp = pidx(gi, gj);
    const int ip = pidx(ii, ij);
    switch (bc_.side[side]) {
      case BoundaryKind2D::outflow: {
        pad_u_[gp] = pad_u_[ip];
        pad_v_[gp] = pad_v_[ip];
        // mirror the centroid across the boundary edge line
        Vec2 d = edge_b - edge_a;
        const double len = norm2(d);
        WallLine wl{edge_a, {d[1] / len, -d[0] / len}};
        pad_c_[gp] = reflect_point(pad_c_[ip], wl);
        pad_ok_[gp] = 1;
        break;
      }
      case BoundaryKind2D::reflective: {
        const WallLine& w = bc_.wall[side];
        pad_u_[gp] = mirror_state(pad_u_[ip], w.normal);
        pad_v_[gp] = mirror_prim(pad_v_[ip], w.normal);
        pad_c_[gp] = reflect_point(pad_c_[ip], w);
        pad_ok_[gp] = 1;
        break;
      }
      case BoundaryKind2D::pressure_drive: {
        Vec2 d = edge_b - edge_a;
        const double len = norm2(d);
        WallLine wl{edge_a, {d[1] / len, -d[0] / len}};
        pad_c_[gp] = reflect_point(pad_c_[ip], wl);
        Prim2 v = pad_v_[ip];
        v.p = bc_.drive_pressure(pad_c_[gp]);
        pad_v_[gp] = v;
        pad_u_[gp] = prim_to_cons(v, gas_);
        pad_ok_[gp] = 1;
        break;
      }
      case BoundaryKind2D::periodic: {
        // wrapped below
        break;
      }
      case BoundaryKind2D::degenerate:
        break;
    }
  };

  for (int j = 0; j < ny_; ++j) {
    if (bc_.x_periodic()) {
      pad_u_[pidx(-1, j)] = pad_u_[pidx(nx_ - 1, j)];
      pad_v_[pidx(-1, j)] = pad_v_[pidx(nx_ - 1, j)];
      pad_c_[pidx(-1, j)] = pad_c_[pidx(nx_ - 1, j)] - bc_.period_x;
      pad_ok_[pidx(-1, j)] = 1;
      pad_u_[pidx(nx_, j)] = pad_u_[pidx(0, j)];
      pad_v_[pidx(nx_, j)] = pad_v_[pidx(0, j)];
      pad_c_[pidx(nx_, j)] = pad_c_[pidx(0, j)] + bc_.period_x;
      pad_ok_[pidx(nx_, j)] = 1;
    } else {
      fill_ghost(kLeft, -1, j, 0, j, m.v(0, j), m.v(0, j + 1));
      fill_ghost(kRight, nx_, j, nx_ - 1, j, m.v(nx_, j), m.v(nx_, j + 1));
    }
  }
  for (int i = 0; i < nx_; ++i) {
    if (bc_.y_periodic()) {
      pad_u_[pidx(i, -1)] = pad_u_[pidx(i, ny_ - 1)];
      pad_v_[pidx(i, -1)] = pad_v_[pidx(i, ny_ - 1)];
      pad_c_[pidx(i, -1)] = pad_c_[pidx(i, ny_ - 1)] - bc_.period_y;
      pad_ok_[pidx(i, -1)] = 1;
      pad_u_[pidx(i, ny_)] = pad_u_[pidx(i, 0)];
      pad_v_[pidx(i, ny_)] = pad_v_[pidx(i, 0)];
      pad_c_[pidx(i, ny_)] = pad_c_[pidx(i, 0)] + bc_.period_y;
      pad_ok_[pidx(i, ny_)] = 1;
    } else {
      fill_ghost(kBottom, i, -1, i, 0, m.v(i, 0), m.v(i + 1, 0));
      fill_ghost(kTop, i, ny_, i, ny_ - 1, m.v(i, ny_), m.v(i + 1, ny_));
    }
  }

  // reconstruction, limiter and the CFL ingredients
  std::vector<long> limited(cfg_.order == 2 ? cells : 0);
  std::vector<long> singular(cfg_.order == 2 ? cells : 0);
  parallel_for(cells, [&](int c) {
    const int i = c % nx_;
    const int j = c / nx_;
    const int p = pidx(i, j);
    double lsum = 0.0;
    for (int e = 0; e < 4; ++e) lsum += geom_[c].edge[e].length;

    if (cfg_.order == 1) {
      cell_sig_[c] = max_signal_speed(pad_v_[p], gas_);
      cell_dtlen_[c] = geom_[c].area / lsum;
      return;
    }

    Weno2DInput in;
    in.u0 = pad_u_[p];
    in.v0 = pad_v_[p];
    in.centroid0 = pad_c_[p];
    in.area0 = geom_[c].area;
    in.eps_weno = cfg_.eps_weno;
    const int nbp[4] = {pidx(i + 1, j), pidx(i - 1, j), pidx(i, j + 1), pidx(i, j - 1)};
    for (int k = 0; k < 4; ++k) {
      in.nb[k] = pad_ok_[nbp[k]] ? &pad_u_[nbp[k]] : nullptr;
      in.nb_centroid[k] = pad_c_[nbp[k]];
    }

    const auto corners = m.corners(i, j);
    bool lim = false;
    long sing = 0;
    double sig = 0.0;
    double jmin = std::numeric_limits<double>::max();
    for (int e = 0; e < 4; ++e) {
      Cons2* ev = &vals_[(c * 4 + e) * 3];
      Prim2* evp = &valv_[(c * 4 + e) * 3];
      const EdgeFrame& frame = geom_[c].edge[e];
      if (frame.length == 0.0) {
        for (int a = 0; a < 3; ++a) {
          ev[a] = pad_u_[p];
          evp[a] = pad_v_[p];
        }
        continue;
      }
      std::array<Vec2, 3> pts;
      for (int a = 0; a < 3; ++a) {
        const auto rp = edge_ref_point(e, a);
        pts[a] = bilinear_map(corners, rp[0], rp[1]);
      }
      auto rec = weno2d_reconstruct(in, frame, pts, gas_);
      sing += rec.singular_stencils;

      if (!(quad_[c].omega_star[e] > 0.0))
        throw TangledCell("step: nonpositive interior quadrature weight");
      Cons2 wsum{0.0, {0.0, 0.0}, 0.0};
      for (int a = 0; a < 3; ++a) {
        const double ja = quad_[c].edge_jacobian(e, a);
        wsum = wsum + (kSimpsonW[a] * cfg_.omega1 * ja) * rec.value[a];
        if (ja > 0.0) jmin = std::min(jmin, ja);
      }
      Cons2 star = (1.0 / quad_[c].omega_star[e]) * (geom_[c].area * pad_u_[p] - wsum);

      std::array<Cons2*, 4> ptrs = {&rec.value[0], &rec.value[1], &rec.value[2], &star};
      const auto theta = pcp_limit<2>(pad_u_[p], ptrs, cfg_.eps_pcp);
      lim = lim || theta[0] < 1.0 || theta[1] < 1.0;

      for (int a = 0; a < 3; ++a) {
        ev[a] = rec.value[a];
        evp[a] = cons_to_prim(rec.value[a], gas_, pad_v_[p].p);
        sig = std::max(sig, max_signal_speed(evp[a], gas_));
      }
    }
    if (jmin == std::numeric_limits<double>::max())
      throw TangledCell("step: no positive edge jacobian");
    cell_sig_[c] = sig;
    cell_dtlen_[c] = jmin / lsum;
    limited[c] = lim ? 1 : 0;
    singular[c] = sing;
  });

  if (cfg_.order == 2) {
    if ((int)limited_flag_.size() != cells) limited_flag_.assign(cells, 0);
    for (int c = 0; c < cells; ++c) {
      stats.limited_cells += limited[c];
      stats.singular_stencils += singular[c];
      if (limited[c]) limited_flag_[c] = 1;
    }
  }
  stats.cell_stage_instances += cells;
}

double Solver2D::dt_bound() const {
  double dt = std::numeric_limits<double>::max();
  const int cells = nx_ * ny_;
  for (int c = 0; c < cells; ++c) dt = std::min(dt, cell_dtlen_[c] / cell_sig_[c]);
  dt *= cfg_.cfl;
  if (cfg_.order == 2) dt *= cfg_.omega1 / 4.0;
  return dt;
}

void Solver2D::fluxes(const Mesh2D& m, StageOut& out, StepStats2D& stats) {
  (void)stats;
  const int cells = nx_ * ny_;
  const int pw = nx_ + 2;
  auto pidx = [pw](int i, int j) { return (j + 1) * pw + (i + 1); };

  const bool xper = bc_.x_periodic();
  const bool yper = bc_.y_periodic();
  const int nvx = nx_ + 1;
  eflux_v_.assign(nvx * ny_, {0.0, 0.0, 0.0, 0.0});
  evel_v_.assign(nvx * ny_, {Vec2{0.0, 0.0}, Vec2{0.0, 0.0}});
  eflux_h_.assign(nx_ * (ny_ + 1), {0.0, 0.0, 0.0, 0.0});
  evel_h_.assign(nx_ * (ny_ + 1), {Vec2{0.0, 0.0}, Vec2{0.0, 0.0}});
  std::vector<double> elen_v(nvx * ny_, 0.0), elen_h(nx_ * (ny_ + 1), 0.0);

  // One pass per edge; the from side is the lower-index cell and the canonical
  // normal points toward increasing index. Negative from/to encode a ghost pad
  // slot as -(pad_index + 1).
  auto solve_edge = [&](const Vec2& a, const Vec2& b, bool vertical, int from_c, int to_c,
                        int ghost_side, int from_edge, int to_edge,
                        std::array<double, 4>& flux, std::array<Vec2, 2>& vel,
                        double& length) {
    const Vec2 ev = b - a;
    const double len = norm2(ev);
    length = len;
    if (len == 0.0) return;
    const EdgeFrame frame = vertical ? EdgeFrame::from_normal({ev[1] / len, -ev[0] / len}, len)
                                     : EdgeFrame::from_normal({-ev[1] / len, ev[0] / len}, len);

    auto fan_at = [&](const Cons2& ul, const Prim2& vl, const Cons2& ur, const Prim2& vr) {
      return hllc_flux_normal_rotated(rotate_state(ul, frame), rotate_prim(vl, frame),
                                      rotate_state(ur, frame), rotate_prim(vr, frame), frame,
                                      gas_);
    };
    auto endpoint_vel = [&](const WaveFan2& fan) {
      const double ut = 0.5 * (fan.ut_left + fan.ut_right);
      return fan.s_contact * frame.normal + ut * frame.tangent;
    };

    if (cfg_.order == 1) {
      const WaveFan2 fan =
          fan_at(pad_u_[from_c], pad_v_[from_c], pad_u_[to_c], pad_v_[to_c]);
      for (int k = 0; k < 4; ++k) flux[k] = fan.flux_global[k] * len;
      vel[0] = endpoint_vel(fan);
      vel[1] = vel[0];
      return;
    }

    for (int aq = 0; aq < 3; ++aq) {
      Cons2 ul{}, ur{};
      Prim2 vl{}, vr{};
      const bool from_ghost = from_c < 0;
      const bool to_ghost = to_c < 0;
      if (!from_ghost) {
        ul = vals_[(from_c * 4 + from_edge) * 3 + aq];
        vl = valv_[(from_c * 4 + from_edge) * 3 + aq];
      }
      if (!to_ghost) {
        ur = vals_[(to_c * 4 + to_edge) * 3 + aq];
        vr = valv_[(to_c * 4 + to_edge) * 3 + aq];
      }
      if (from_ghost) {
        if (bc_.side[ghost_side] == BoundaryKind2D::reflective) {
          ul = mirror_state(ur, bc_.wall[ghost_side].normal);
          vl = mirror_prim(vr, bc_.wall[ghost_side].normal);
        } else {
          ul = pad_u_[-from_c - 1];
          vl = pad_v_[-from_c - 1];
        }
      }
      if (to_ghost) {
        if (bc_.side[ghost_side] == BoundaryKind2D::reflective) {
          ur = mirror_state(ul, bc_.wall[ghost_side].normal);
          vr = mirror_prim(vl, bc_.wall[ghost_side].normal);
        } else {
          ur = pad_u_[-to_c - 1];
          vr = pad_v_[-to_c - 1];
        }
      }

      const WaveFan2 fan = fan_at(ul, vl, ur, vr);
      for (int k = 0; k < 4; ++k) flux[k] += kSimpsonW[aq] * fan.flux_global[k] * len;
      if (aq == 0) vel[0] = endpoint_vel(fan);
      if (aq == 2) vel[1] = endpoint_vel(fan);
    }
  };

  const int vstride = xper ? nx_ : nx_ + 1;
  parallel_for(vstride * ny_, [&](int idx) {
    const int i = idx % vstride;
    const int j = idx / vstride;
    const int e = j * nvx + i;
    if (!xper && i == 0 && bc_.side[kLeft] == BoundaryKind2D::degenerate) return;
    int from, to, ghost_side = -1;
    if (cfg_.order == 1) {
      from = xper ? pidx((i + nx_ - 1) % nx_, j) : pidx(i - 1, j);
      to = xper ? pidx(i, j) : pidx(i, j);
    } else if (xper) {
      from = m.cidx((i + nx_ - 1) % nx_, j);
      to = m.cidx(i, j);
    } else {
      from = (i > 0) ? m.cidx(i - 1, j) : -(pidx(-1, j) + 1);
      to = (i < nx_) ? m.cidx(i, j) : -(pidx(nx_, j) + 1);
      ghost_side = (i == 0) ? kLeft : (i == nx_ ? kRight : -1);
    }
    solve_edge(m.v(i, j), m.v(i, j + 1), true, from, to, ghost_side, 1, 3, eflux_v_[e],
               evel_v_[e], elen_v[e]);
  });

  parallel_for(nx_ * (yper ? ny_ : ny_ + 1), [&](int idx) {
    const int i = idx % nx_;
    const int j = idx / nx_;
    const int e = j * nx_ + i;
    int from, to, ghost_side = -1;
    if (cfg_.order == 1) {
      from = yper ? pidx(i, (j + ny_ - 1) % ny_) : pidx(i, j - 1);
      to = yper ? pidx(i, j) : pidx(i, j);
    } else if (yper) {
      from = m.cidx(i, (j + ny_ - 1) % ny_);
      to = m.cidx(i, j);
    } else {
      from = (j > 0) ? m.cidx(i, j - 1) : -(pidx(i, -1) + 1);
      to = (j < ny_) ? m.cidx(i, j) : -(pidx(i, ny_) + 1);
      ghost_side = (j == 0) ? kBottom : (j == ny_ ? kTop : -1);
    }
    solve_edge(m.v(i, j), m.v(i + 1, j), false, from, to, ghost_side, 2, 0, eflux_h_[e],
               evel_h_[e], elen_h[e]);
  });

  // cell rates: sum of outward edge fluxes
  out.rate.assign(cells, {0.0, 0.0, 0.0, 0.0});
  parallel_for(cells, [&](int c) {
    const int i = c % nx_;
    const int j = c / nx_;
    const int er = j * nvx + (xper ? (i + 1) % nx_ : i + 1);
    const int el = j * nvx + i;
    const int et = (yper ? (j + 1) % ny_ : j + 1) * nx_ + i;
    const int eb = j * nx_ + i;
    for (int k = 0; k < 4; ++k)
      out.rate[c][k] =
          eflux_v_[er][k] - eflux_v_[el][k] + eflux_h_[et][k] - eflux_h_[eb][k];
  });

  // vertex velocities averaged over incident edges
  const int mvx = xper ? nx_ : nx_ + 1;
  const int mvy = yper ? ny_ : ny_ + 1;
  out.vel.assign((nx_ + 1) * (ny_ + 1), {0.0, 0.0});
  parallel_for(mvx * mvy, [&](int idx) {
    const int i = idx % mvx;
    const int j = idx / mvx;
    Vec2 sum{0.0, 0.0};
    int count = 0;
    auto add_v = [&](int ei, int ej, int end) {
      if (ei < 0 || ei > nx_ || ej < 0 || ej >= ny_) return;
      const int e = ej * nvx + ei;
      if (elen_v[e] == 0.0) return;
      sum = sum + evel_v_[e][end];
      ++count;
    };
    auto add_h = [&](int ei, int ej, int end) {
      if (ei < 0 || ei >= nx_ || ej < 0 || ej > ny_) return;
      const int e = ej * nx_ + ei;
      if (elen_h[e] == 0.0) return;
      sum = sum + evel_h_[e][end];
      ++count;
    };
    add_v(i, j, 0);
    add_v(i, j - 1 >= 0 ? j - 1 : (yper ? ny_ - 1 : -1), 1);
    add_h(i, j, 0);
    add_h(i - 1 >= 0 ? i - 1 : (xper ? nx_ - 1 : -1), j, 1);
    out.vel[m.vidx(i, j)] = (count > 0) ? (1.0 / count) * sum : Vec2{0.0, 0.0};
  });

  // merged polar origin column: one velocity for all coincident vertices,
  // averaged over the incident radial edges
  if (bc_.merged_left_column) {
    Vec2 sum{0.0, 0.0};
    int count = 0;
    for (int j = 0; j <= (yper ? ny_ - 1 : ny_); ++j) {
      const int e = j * nx_;  // horizontal edge (0, j)
      if (elen_h[e] != 0.0) {
        sum = sum + evel_h_[e][0];
        ++count;
      }
    }
    Vec2 v = (count > 0) ? (1.0 / count) * sum : Vec2{0.0, 0.0};
    for (int side : {kBottom, kTop})
      if (bc_.side[side] == BoundaryKind2D::reflective) {
        const Vec2 w = bc_.wall[side].normal;
        v = v - dot(v, w) * w;
      }
    for (int j = 0; j <= ny_; ++j) out.vel[m.vidx(0, j)] = v;
  }

  // reflective walls: boundary vertices slide along the wall
  auto project_side = [&](int side) {
    if (bc_.side[side] != BoundaryKind2D::reflective) return;
    const Vec2 w = bc_.wall[side].normal;
    auto proj = [&](int i, int j) {
      Vec2& v = out.vel[m.vidx(i, j)];
      const double d = dot(v, w);
      v = v - d * w;
    };
    if (side == kLeft)
      for (int j = 0; j <= ny_; ++j) proj(0, j);
    if (side == kRight)
      for (int j = 0; j <= ny_; ++j) proj(nx_, j);
    if (side == kBottom)
      for (int i = 0; i <= nx_; ++i) proj(i, 0);
    if (side == kTop)
      for (int i = 0; i <= nx_; ++i) proj(i, ny_);
  };
  for (int s = 0; s < 4; ++s) project_side(s);

  // periodic slaves copy the master velocity
  if (xper)
    for (int j = 0; j <= ny_; ++j)
      out.vel[m.vidx(nx_, j)] = out.vel[m.vidx(0, yper ? j % ny_ : j)];
  if (yper)
    for (int i = 0; i <= nx_; ++i) out.vel[m.vidx(i, ny_)] = out.vel[m.vidx(xper ? i % nx_ : i, 0)];
}

void Solver2D::advance_euler(const Mesh2D& in, const StageOut& so, double dt,
                             Mesh2D& out) const {
  out.nx = in.nx;
  out.ny = in.ny;
  out.time = in.time + dt;
  out.vertex.resize(in.vertex.size());
  out.avg.resize(in.avg.size());
  for (size_t k = 0; k < in.vertex.size(); ++k)
    out.vertex[k] = in.vertex[k] + dt * so.vel[k];
  finalize_positions(out);
  const int cells = in.nx * in.ny;
  parallel_for(cells, [&](int c) {
    const int i = c % in.nx;
    const int j = c / in.nx;
    const double a_new = polygon_area(out.corners(i, j));
    Cons2 tot = geom_[c].area * in.avg[c];
    for (int k = 0; k < 4; ++k) {
      const double d = dt * so.rate[c][k];
      if (k == 1) tot.mom[0] -= d;
      if (k == 2) tot.mom[1] -= d;
      if (k == 3) tot.E -= d;
    }
    out.avg[c] = (1.0 / a_new) * tot;
  });
}

void Solver2D::finalize_positions(Mesh2D& m) const {
  if (bc_.x_periodic())
    for (int j = 0; j <= m.ny; ++j) m.v(m.nx, j) = m.v(0, j) + bc_.period_x;
  if (bc_.y_periodic())
    for (int i = 0; i <= m.nx; ++i) m.v(i, m.ny) = m.v(i, 0) + bc_.period_y;
  if (bc_.merged_left_column)
    for (int j = 1; j <= m.ny; ++j) m.v(0, j) = m.v(0, 0);
}

void Solver2D::check_state(const Mesh2D& m, const char* where) const {
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const double a = polygon_area(m.corners(i, j));
      if (!(a > 0.0)) {
        std::ostringstream os;
        os << where << ": tangled cell (" << i << "," << j << "), area " << a
           << ", t=" << m.time;
        throw TangledCell(os.str());
      }
      if (!admissible(m.cell(i, j))) {
        std::ostringstream os;
        os << where << ": inadmissible average at (" << i << "," << j
           << "): D=" << m.cell(i, j).D << ", q=" << q_margin(m.cell(i, j)) << ", t=" << m.time;
        throw StepRejected(os.str());
      }
    }
}

double Solver2D::compute_dt(const Mesh2D& m) {
  StepStats2D scratch;
  scratch.min_rho = std::numeric_limits<double>::max();
  scratch.min_p = std::numeric_limits<double>::max();
  prepare(m, scratch);
  return dt_bound();
}

double Solver2D::run_stages(Mesh2D& m, double dt_cap, bool use_cap_only, StepStats2D& stats) {
  const int cells = m.nx * m.ny;
  limited_flag_.assign(cells, 0);
  const std::vector<Vec2> x0 = m.vertex;

  prepare(m, stats);
  ++stats.stages;
  const double dt = use_cap_only ? dt_cap : std::min(dt_cap, dt_bound());

  std::vector<Cons2> ua0(cells);
  for (int c = 0; c < cells; ++c) ua0[c] = geom_[c].area * m.avg[c];

  StageOut s0;
  fluxes(m, s0, stats);

  Mesh2D s1;
  advance_euler(m, s0, dt, s1);
  check_state(s1, "stage 1");

  if (cfg_.order == 1) {
    m = std::move(s1);
    return dt;
  }

  prepare(s1, stats);
  ++stats.stages;
  std::vector<Cons2> ua1(cells);
  for (int c = 0; c < cells; ++c) ua1[c] = geom_[c].area * s1.avg[c];

  StageOut st1;
  fluxes(s1, st1, stats);

  for (size_t k = 0; k < m.vertex.size(); ++k)
    m.vertex[k] = 0.5 * x0[k] + 0.5 * (s1.vertex[k] + dt * st1.vel[k]);
  finalize_positions(m);
  parallel_for(cells, [&](int c) {
    const int i = c % m.nx;
    const int j = c / m.nx;
    const double a_new = polygon_area(m.corners(i, j));
    Cons2 tot = 0.5 * ua0[c] + 0.5 * ua1[c];
    const double d1 = 0.5 * dt * st1.rate[c][1];
    const double d2 = 0.5 * dt * st1.rate[c][2];
    const double d3 = 0.5 * dt * st1.rate[c][3];
    tot.mom[0] -= d1;
    tot.mom[1] -= d2;
    tot.E -= d3;
    m.avg[c] = (1.0 / a_new) * tot;
  });
  m.time += dt;
  check_state(m, "stage 2");
  return dt;
}

StepStats2D Solver2D::step(Mesh2D& m, double dt) {
  StepStats2D stats;
  stats.min_rho = std::numeric_limits<double>::max();
  stats.min_p = std::numeric_limits<double>::max();
  run_stages(m, dt, true, stats);
  return stats;
}

double Solver2D::step_auto(Mesh2D& m, double dt_cap, StepStats2D& stats) {
  return run_stages(m, dt_cap, false, stats);
}

} // namespace lagrhd
