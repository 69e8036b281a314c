#ifndef LAGRHD_PROBLEMS_HPP
#define LAGRHD_PROBLEMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "lagrhd/scheme1d.hpp"
#include "lagrhd/scheme2d.hpp"

namespace lagrhd {

struct Problem1D {
  std::string name;
  double gamma;
  double x0, x1;
  Boundary1D boundary = Boundary1D::outflow;
  double t_final;
  bool smooth = false;  // Gauss-quadrature initialisation (else centroid sampling)
  std::function<Prim1(double)> initial;
  std::function<Prim1(double, double)> exact;  // null when no closed-form solution
};

enum class MeshFamily2D { cartesian, polar };

struct Problem2D {
  std::string name;
  double gamma;
  MeshFamily2D family = MeshFamily2D::cartesian;
  // cartesian box, or (r, theta) ranges for the polar family
  double a0, a1, b0, b1;
  BoundaryConfig2D boundary;
  double t_final;
  bool smooth = false;
  std::function<Prim2(const Vec2&)> initial;
  std::function<Prim2(const Vec2&, double)> exact;
};

const Problem1D& problem_1d(const std::string& name);
const Problem2D& problem_2d(const std::string& name);
bool is_problem_1d(const std::string& name);
bool is_problem_2d(const std::string& name);
std::vector<std::string> problem_names();

Mesh1D build_mesh_1d(const Problem1D& p, int n, const GasModel& g);
Mesh2D build_mesh_2d(const Problem2D& p, int nx, int ny, const GasModel& g);

// Isentropic-pulse machinery, exposed for the oracle self-checks.
struct IsentropicPulse {
  double gamma, rho_ref, strength, half_width, entropy_k;

  double density(double x) const;
  double sound_speed(double rho) const;
  double velocity(double rho) const;       // from the constant Riemann invariant
  double riemann_invariant(double u, double cs) const;
  Prim1 prim_at(double x) const;
  // foot of the straight forward characteristic through (x, t)
  double characteristic_foot(double x, double t) const;
  Prim1 exact(double x, double t) const;
};

IsentropicPulse isentropic_pulse_default();

// Steady relativistic vortex and its Lorentz-boosted time-dependent solution.
struct BoostedVortex {
  double gamma, strength, boost;

  Prim2 steady(const Vec2& xy) const;
  Vec2 lab_coords(const Vec2& xy_prime, double t_prime) const;     // forward map
  Vec2 moving_coords(const Vec2& xy_lab, double t_prime) const;    // inverse map
  Prim2 exact(const Vec2& xy_prime, double t_prime) const;
};

BoostedVortex boosted_vortex_default();

} // namespace lagrhd

#endif
