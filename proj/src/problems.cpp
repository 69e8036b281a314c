#include "lagrhd/problems.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace lagrhd {

namespace {

constexpr double kPi = std::numbers::pi;

const std::array<double, 5> kGaussNode = {-0.4530899229693320, -0.2692346550528415, 0.0,
                                          0.2692346550528415, 0.4530899229693320};
const std::array<double, 5> kGaussWeight = {0.1184634425280945, 0.2393143352496832,
                                            0.2844444444444444, 0.2393143352496832,
                                            0.1184634425280945};

} // namespace

// ---------------------------------------------------------------- 1D pulse

double IsentropicPulse::density(double x) const {
  const double l = half_width;
  if (std::abs(x) >= l) return rho_ref;
  const double f = std::pow(x * x / (l * l) - 1.0, 4);
  return rho_ref + strength * f;
}

double IsentropicPulse::sound_speed(double rho) const {
  const double gp = gamma / (gamma - 1.0);
  const double kr = entropy_k * std::pow(rho, gamma - 1.0);
  return std::sqrt(gamma * kr / (1.0 + gp * kr));
}

double IsentropicPulse::riemann_invariant(double u, double cs) const {
  const double sg = std::sqrt(gamma - 1.0);
  return 0.5 * std::log((1.0 + u) / (1.0 - u)) - std::log((sg + cs) / (sg - cs)) / sg;
}

double IsentropicPulse::velocity(double rho) const {
  const double sg = std::sqrt(gamma - 1.0);
  const double cs = sound_speed(rho);
  const double cr = sound_speed(rho_ref);
  const double phi =
      (std::log((sg + cs) / (sg - cs)) - std::log((sg + cr) / (sg - cr))) / sg;
  return std::tanh(phi);
}

Prim1 IsentropicPulse::prim_at(double x) const {
  const double rho = density(x);
  return {rho, {velocity(rho)}, entropy_k * std::pow(rho, gamma)};
}

double IsentropicPulse::characteristic_foot(double x, double t) const {
  auto shift = [&](double x0) {
    const Prim1 v = prim_at(x0);
    const double cs = sound_speed(v.rho);
    const double lam = (v.vel[0] + cs) / (1.0 + v.vel[0] * cs);
    return x0 + lam * t - x;
  };
  double lo = x - t, hi = x + t;
  double flo = shift(lo);
  if (flo > 0.0 || shift(hi) < 0.0)
    throw CharacteristicFold("isentropic pulse: characteristic bracket lost");
  // a second sign change in the bracket means the wave has folded
  int changes = 0;
  double prev = flo;
  for (int k = 1; k <= 32; ++k) {
    const double f = shift(lo + (hi - lo) * k / 32.0);
    if ((prev < 0.0 && f >= 0.0) || (prev > 0.0 && f <= 0.0)) ++changes;
    if (f != 0.0) prev = f;
  }
  if (changes > 1) throw CharacteristicFold("isentropic pulse: shock has formed");

  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(x)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (shift(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Prim1 IsentropicPulse::exact(double x, double t) const {
  return prim_at(characteristic_foot(x, t));
}

IsentropicPulse isentropic_pulse_default() {
  return {5.0 / 3.0, 1e-7, 1.0, 0.3, 0.1};
}

// ---------------------------------------------------------------- 2D vortex

Prim2 BoostedVortex::steady(const Vec2& xy) const {
  const double r2 = xy[0] * xy[0] + xy[1] * xy[1];
  const double alpha = (gamma - 1.0) / gamma * strength * strength / (8.0 * kPi * kPi);
  const double ae = alpha * std::exp(1.0 - r2);
  const double rho = std::pow(1.0 - ae, 1.0 / (gamma - 1.0));
  // the swirl profile balancing rho h gl^2 v^2 / r against dp/dr exactly
  const double beta = 2.0 * gamma * ae / (2.0 * gamma - 1.0 - gamma * ae);
  const double f = std::sqrt(beta / (1.0 + beta * r2));
  return {rho, {-xy[1] * f, xy[0] * f}, std::pow(rho, gamma)};
}

Vec2 BoostedVortex::lab_coords(const Vec2& xp, double tp) const {
  const double gl = 1.0 / std::sqrt(1.0 - boost * boost);
  const double a = 0.5 * (gl - 1.0);
  const double s = xp[0] + xp[1];
  const double drift = gl * tp * boost / std::sqrt(2.0);
  return {xp[0] + a * s + drift, xp[1] + a * s + drift};
}

Vec2 BoostedVortex::moving_coords(const Vec2& xl, double tp) const {
  // invert x = (1+a) x' + a y' + d, y = a x' + (1+a) y' + d
  const double gl = 1.0 / std::sqrt(1.0 - boost * boost);
  const double a = 0.5 * (gl - 1.0);
  const double d = gl * tp * boost / std::sqrt(2.0);
  const double det = (1.0 + a) * (1.0 + a) - a * a;
  const double rx = xl[0] - d, ry = xl[1] - d;
  return {((1.0 + a) * rx - a * ry) / det, ((1.0 + a) * ry - a * rx) / det};
}

Prim2 BoostedVortex::exact(const Vec2& xp, double tp) const {
  const Vec2 xl = lab_coords(xp, tp);
  const Prim2 v = steady(xl);
  const double gl = 1.0 / std::sqrt(1.0 - boost * boost);
  const double w2 = boost / std::sqrt(2.0);
  const double usum = v.vel[0] + v.vel[1];
  const double denom = 1.0 - w2 * usum;
  const double shear = gl * boost * boost / (2.0 * (gl + 1.0)) * usum;
  return {v.rho,
          {(v.vel[0] / gl - w2 + shear) / denom, (v.vel[1] / gl - w2 + shear) / denom},
          v.p};
}

BoostedVortex boosted_vortex_default() { return {1.4, 10.0828, 0.5}; }

// ---------------------------------------------------------------- registry

namespace {

Problem1D make_pulse() {
  const IsentropicPulse pulse = isentropic_pulse_default();
  Problem1D p;
  p.name = "isentropic_pulse";
  p.gamma = pulse.gamma;
  p.x0 = -0.35;
  p.x1 = 1.0;
  p.boundary = Boundary1D::outflow;
  p.t_final = 0.02;
  p.smooth = true;
  p.initial = [pulse](double x) { return pulse.prim_at(x); };
  p.exact = [pulse](double x, double t) { return pulse.exact(x, t); };
  return p;
}

Problem1D make_blast_interaction() {
  Problem1D p;
  p.name = "blast_interaction";
  p.gamma = 1.4;
  p.x0 = 0.0;
  p.x1 = 1.0;
  p.boundary = Boundary1D::outflow;
  p.t_final = 0.43;
  p.smooth = false;
  p.initial = [](double x) -> Prim1 {
    if (x < 0.1) return {1.0, {0.0}, 1000.0};
    if (x < 0.9) return {1.0, {0.0}, 0.01};
    return {1.0, {0.0}, 100.0};
  };
  return p;
}

Problem2D make_vortex() {
  const BoostedVortex vx = boosted_vortex_default();
  Problem2D p;
  p.name = "boosted_vortex";
  p.gamma = vx.gamma;
  p.family = MeshFamily2D::cartesian;
  p.a0 = -5.0;
  p.a1 = 5.0;
  p.b0 = -5.0;
  p.b1 = 5.0;
  for (int s = 0; s < 4; ++s) p.boundary.side[s] = BoundaryKind2D::periodic;
  p.boundary.period_x = {10.0, 0.0};
  p.boundary.period_y = {0.0, 10.0};
  p.t_final = 1.0;
  p.smooth = true;
  p.initial = [vx](const Vec2& x) { return vx.exact(x, 0.0); };
  p.exact = [vx](const Vec2& x, double t) { return vx.exact(x, t); };
  return p;
}

void set_polar_boundary(Problem2D& p, BoundaryKind2D outer) {
  p.boundary.side[0] = BoundaryKind2D::degenerate;
  p.boundary.side[1] = outer;
  p.boundary.side[2] = BoundaryKind2D::reflective;
  p.boundary.side[3] = BoundaryKind2D::reflective;
  p.boundary.wall[2] = {{0.0, 0.0}, {0.0, 1.0}};  // theta = 0 wall on the x axis
  p.boundary.wall[3] = {{0.0, 0.0}, {1.0, 0.0}};  // theta = pi/2 wall on the y axis
  p.boundary.merged_left_column = true;
}

Problem2D make_blast(const std::string& name, bool polar) {
  Problem2D p;
  p.name = name;
  p.gamma = 1.4;
  p.t_final = 0.4;
  p.smooth = false;
  p.initial = [](const Vec2& x) -> Prim2 {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    if (r < 0.5) return {1e-10, {0.0, 0.0}, 1.0};
    return {1e-12, {0.0, 0.0}, 0.05};
  };
  if (polar) {
    p.family = MeshFamily2D::polar;
    p.a0 = 0.0;
    p.a1 = 1.0;
    p.b0 = 0.0;
    p.b1 = 0.5 * kPi;
    set_polar_boundary(p, BoundaryKind2D::outflow);
  } else {
    p.family = MeshFamily2D::cartesian;
    p.a0 = 0.0;
    p.a1 = 1.0;
    p.b0 = 0.0;
    p.b1 = 1.0;
    for (int s = 0; s < 4; ++s) p.boundary.side[s] = BoundaryKind2D::reflective;
    p.boundary.wall[0] = {{0.0, 0.0}, {1.0, 0.0}};
    p.boundary.wall[1] = {{1.0, 0.0}, {1.0, 0.0}};
    p.boundary.wall[2] = {{0.0, 0.0}, {0.0, 1.0}};
    p.boundary.wall[3] = {{0.0, 1.0}, {0.0, 1.0}};
  }
  return p;
}

Problem2D make_strong_blast() {
  Problem2D p = make_blast("strong_blast", true);
  p.initial = [](const Vec2& x) -> Prim2 {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    if (r < 0.5) return {1.0, {0.0, 0.0}, 1.0};
    return {1.0, {0.0, 0.0}, 1e-12};
  };
  return p;
}

Problem2D make_implosion() {
  Problem2D p = make_blast("implosion", true);
  p.t_final = 0.6;
  p.initial = [](const Vec2& x) -> Prim2 {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    const double ur = 0.9;
    return {1.0, {-ur * x[0] / r, -ur * x[1] / r}, 1e-12};
  };
  return p;
}

Problem2D make_icf() {
  Problem2D p = make_blast("icf", true);
  p.gamma = 5.0 / 3.0;
  p.t_final = 1.0;
  set_polar_boundary(p, BoundaryKind2D::pressure_drive);
  p.boundary.drive_pressure = [](const Vec2& x) {
    const double theta = std::atan2(x[1], x[0]);
    return 1e12 * (1.0 + 0.05 * std::cos(6.0 * theta));
  };
  p.initial = [](const Vec2& x) -> Prim2 {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    if (r < 0.9) return {0.01, {0.0, 0.0}, 5e9};
    return {1.0, {0.0, 0.0}, 1e11};
  };
  return p;
}

const std::map<std::string, Problem1D>& registry_1d() {
  static const std::map<std::string, Problem1D> reg = [] {
    std::map<std::string, Problem1D> r;
    for (auto& p : {make_pulse(), make_blast_interaction()}) r[p.name] = p;
    return r;
  }();
  return reg;
}

const std::map<std::string, Problem2D>& registry_2d() {
  static const std::map<std::string, Problem2D> reg = [] {
    std::map<std::string, Problem2D> r;
    for (auto& p : {make_vortex(), make_blast("cartesian_blast", false),
                    make_blast("polar_blast", true), make_strong_blast(), make_implosion(),
                    make_icf()})
      r[p.name] = p;
    return r;
  }();
  return reg;
}

} // namespace

bool is_problem_1d(const std::string& name) { return registry_1d().count(name) > 0; }
bool is_problem_2d(const std::string& name) { return registry_2d().count(name) > 0; }

const Problem1D& problem_1d(const std::string& name) {
  auto it = registry_1d().find(name);
  if (it == registry_1d().end()) throw ParseError("unknown 1D problem: " + name);
  return it->second;
}

const Problem2D& problem_2d(const std::string& name) {
  auto it = registry_2d().find(name);
  if (it == registry_2d().end()) throw ParseError("unknown 2D problem: " + name);
  return it->second;
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry_1d()) names.push_back(k);
  for (const auto& [k, v] : registry_2d()) names.push_back(k);
  return names;
}

// ------------------------------------------------------------ mesh builders

Mesh1D build_mesh_1d(const Problem1D& p, int n, const GasModel& g) {
  Mesh1D m;
  m.node.resize(n + 1);
  m.avg.resize(n);
  for (int i = 0; i <= n; ++i) m.node[i] = p.x0 + (p.x1 - p.x0) * i / n;
  for (int i = 0; i < n; ++i) {
    const double xc = 0.5 * (m.node[i] + m.node[i + 1]);
    const double w = m.node[i + 1] - m.node[i];
    if (!p.smooth) {
      m.avg[i] = prim_to_cons(p.initial(xc), g);
    } else {
      Cons1 acc{0.0, {0.0}, 0.0};
      for (int q = 0; q < 5; ++q)
        acc = acc + kGaussWeight[q] * prim_to_cons(p.initial(xc + kGaussNode[q] * w), g);
      m.avg[i] = acc;
    }
  }
  return m;
}

Mesh2D build_mesh_2d(const Problem2D& p, int nx, int ny, const GasModel& g) {
  Mesh2D m;
  m.nx = nx;
  m.ny = ny;
  m.vertex.resize((nx + 1) * (ny + 1));
  m.avg.resize(nx * ny);

  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) {
      if (p.family == MeshFamily2D::cartesian) {
        m.v(i, j) = {p.a0 + (p.a1 - p.a0) * i / nx, p.b0 + (p.b1 - p.b0) * j / ny};
      } else {
        const double r = p.a0 + (p.a1 - p.a0) * i / nx;
        const double th = p.b0 + (p.b1 - p.b0) * j / ny;
        Vec2 v{r * std::cos(th), r * std::sin(th)};
        // keep wall vertices exactly on the axes
        if (j == 0 && p.b0 == 0.0) v = {r, 0.0};
        if (j == ny && p.b1 == 0.5 * kPi) v = {0.0, r};
        m.v(i, j) = v;
      }
    }

  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const auto corners = m.corners(i, j);
      if (!p.smooth) {
        m.cell(i, j) = prim_to_cons(p.initial(polygon_centroid(corners)), g);
      } else {
        Cons2 acc{0.0, {0.0, 0.0}, 0.0};
        double wsum = 0.0;
        for (int qa = 0; qa < 5; ++qa)
          for (int qb = 0; qb < 5; ++qb) {
            const double jw = bilinear_jacobian(corners, kGaussNode[qa], kGaussNode[qb]);
            const double w = kGaussWeight[qa] * kGaussWeight[qb] * jw;
            acc = acc +
                  w * prim_to_cons(p.initial(bilinear_map(corners, kGaussNode[qa],
                                                          kGaussNode[qb])),
                                   g);
            wsum += w;
          }
        m.cell(i, j) = (1.0 / wsum) * acc;
      }
    }
  return m;
}

} // namespace lagrhd
