#ifndef LAGRHD_SCHEME1D_HPP
#define LAGRHD_SCHEME1D_HPP

#include <vector>

#include "lagrhd/hllc.hpp"
#include "lagrhd/state.hpp"

namespace lagrhd {

struct Mesh1D {
  std::vector<double> node;  // N+1 strictly increasing positions
  std::vector<Cons1> avg;    // N admissible cell averages
  double time = 0.0;

  int size() const { return static_cast<int>(avg.size()); }
  double width(int i) const { return node[i + 1] - node[i]; }
};

enum class Boundary1D { outflow, reflective, periodic };

struct SchemeConfig1D {
  int order = 1;  // 1, 2 (minmod + SSP-RK2) or 3 (WENO3 + SSP-RK3)
  double cfl = 0.5;
  Boundary1D boundary = Boundary1D::outflow;
  double eps_pcp = 1e-13;
  double eps_weno = 1e-6;
  double omega1 = 1.0 / 6.0;  // end weight of the 3-point Gauss-Lobatto rule

  void validate() const;
};

struct StepStats1D {
  int stages = 0;
  long limited_cells = 0;        // cells with theta < 1, summed over stages
  long cell_stage_instances = 0;
  double min_rho = 0.0, min_p = 0.0;
};

// Padded cell data produced by the boundary treatment (two ghost cells per side).
struct GhostPad1D {
  std::vector<double> node;  // N+5
  std::vector<Cons1> avg;    // N+4
};

// Point values reconstructed inside each padded cell 1..N+2 (one ghost each side),
// limited so that every value is admissible.
struct Recon1D {
  std::vector<Cons1> at_left;   // value at the cell's left interface
  std::vector<Cons1> at_right;  // value at the cell's right interface
  std::vector<Cons1> star;      // interior split value U**
  std::vector<bool> limited;    // theta < 1 in this cell
};

class Solver1D {
 public:
  Solver1D(const GasModel& gas, const SchemeConfig1D& cfg);

  const GasModel& gas() const { return gas_; }
  const SchemeConfig1D& config() const { return cfg_; }

  GhostPad1D apply_boundary(const Mesh1D& m) const;
  Recon1D reconstruct(const Mesh1D& m) const;

  double compute_dt(const Mesh1D& m) const;
  StepStats1D step(Mesh1D& m, double dt);

  // cells whose limiter fired during the most recent step
  const std::vector<unsigned char>& last_limited() const { return limited_flag_; }

 private:
  struct StageResult {
    std::vector<double> node_speed;  // N+1 contact speeds
    std::vector<std::array<double, 3>> flux;  // N+1 interface fluxes
  };

  StageResult stage_fluxes(const Mesh1D& m, StepStats1D& stats);
  void euler_update(const Mesh1D& in, const StageResult& sr, double dt, Mesh1D& out) const;
  static void check_state(const Mesh1D& m, const char* where);

  GasModel gas_;
  SchemeConfig1D cfg_;
  std::vector<unsigned char> limited_flag_;
};

// Exact integral average of the two neighbouring HLLC fans over the moved cell;
// equivalent to one forward-Euler step of the first-order scheme.
Cons1 godunov_average(const Cons1& left_neighbor, const Cons1& self,
                      const Cons1& right_neighbor, double xl, double xr, double dt,
                      const GasModel& g);

} // namespace lagrhd

#endif
