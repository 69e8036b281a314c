#ifndef LAGRHD_SCHEME2D_HPP
#define LAGRHD_SCHEME2D_HPP

#include <array>
#include <functional>
#include <vector>

#include "lagrhd/geometry2d.hpp"
#include "lagrhd/state.hpp"

namespace lagrhd {

enum class BoundaryKind2D { outflow, reflective, periodic, pressure_drive, degenerate };

// side indices: 0 left (i=0), 1 right (i=nx), 2 bottom (j=0), 3 top (j=ny)
struct WallLine {
  Vec2 point{0.0, 0.0};
  Vec2 normal{0.0, 0.0};
};

struct BoundaryConfig2D {
  std::array<BoundaryKind2D, 4> side = {BoundaryKind2D::outflow, BoundaryKind2D::outflow,
                                        BoundaryKind2D::outflow, BoundaryKind2D::outflow};
  std::array<WallLine, 4> wall{};  // reflective sides
  std::function<double(const Vec2&)> drive_pressure;  // pressure_drive sides
  Vec2 period_x{0.0, 0.0};
  Vec2 period_y{0.0, 0.0};
  // degenerate left column (polar origin): zero-length edges, merged vertices
  bool merged_left_column = false;

  bool x_periodic() const { return side[0] == BoundaryKind2D::periodic; }
  bool y_periodic() const { return side[2] == BoundaryKind2D::periodic; }
};

struct SchemeConfig2D {
  int order = 1;  // 1 or 2
  double cfl = 0.5;
  double eps_pcp = 1e-13;
  double eps_weno = 1e-6;
  double omega1 = 1.0 / 6.0;  // Simpson end weight

  void validate() const;
};

struct StepStats2D {
  int stages = 0;
  long limited_cells = 0;  // cells with any theta < 1, summed over stages
  long cell_stage_instances = 0;
  long singular_stencils = 0;
  double min_rho = 0.0, min_p = 0.0;
};

class Solver2D {
 public:
  Solver2D(const GasModel& gas, const SchemeConfig2D& cfg, const BoundaryConfig2D& bc);

  const GasModel& gas() const { return gas_; }
  const SchemeConfig2D& config() const { return cfg_; }

  double compute_dt(const Mesh2D& m);
  StepStats2D step(Mesh2D& m, double dt);
  // fused variant: evaluates the CFL bound from the first-stage reconstruction,
  // advances by min(bound, dt_cap) and returns the dt actually taken
  double step_auto(Mesh2D& m, double dt_cap, StepStats2D& stats);

  // cells whose limiter fired during the most recent step
  const std::vector<unsigned char>& last_limited() const { return limited_flag_; }

 private:
  struct StageOut {
    std::vector<std::array<double, 4>> rate;  // per cell: sum of outward edge fluxes
    std::vector<Vec2> vel;                    // per vertex
  };

  void prepare(const Mesh2D& m, StepStats2D& stats);  // ghosts, geometry, reconstruction
  double dt_bound() const;
  void fluxes(const Mesh2D& m, StageOut& out, StepStats2D& stats);
  void advance_euler(const Mesh2D& in, const StageOut& so, double dt, Mesh2D& out) const;
  void finalize_positions(Mesh2D& m) const;
  void check_state(const Mesh2D& m, const char* where) const;
  double run_stages(Mesh2D& m, double dt_cap, bool use_cap_only, StepStats2D& stats);

  GasModel gas_;
  SchemeConfig2D cfg_;
  BoundaryConfig2D bc_;

  // stage workspace
  int nx_ = 0, ny_ = 0;
  std::vector<Cons2> pad_u_;
  std::vector<Prim2> pad_v_;
  std::vector<Vec2> pad_c_;
  std::vector<unsigned char> pad_ok_;
  std::vector<CellQuadrature> quad_;
  std::vector<CellGeometry> geom_;
  std::vector<Cons2> vals_;     // cells*4*3 inside edge-point values (limited)
  std::vector<Prim2> valv_;
  std::vector<double> cell_sig_;    // per-cell max signal speed
  std::vector<double> cell_dtlen_;  // per-cell length scale for the CFL bound
  std::vector<double> warm_p_;
  std::vector<std::array<double, 4>> eflux_v_, eflux_h_;  // per-edge flux * length
  std::vector<std::array<Vec2, 2>> evel_v_, evel_h_;      // endpoint velocities
  std::vector<unsigned char> limited_flag_;
};

} // namespace lagrhd

#endif
