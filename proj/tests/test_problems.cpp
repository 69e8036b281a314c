#include <doctest.h>

#include <cmath>

#include "lagrhd/error_norms.hpp"
#include "lagrhd/problems.hpp"

using namespace lagrhd;

TEST_CASE("isentropic pulse: initial data and invariants") {
  const IsentropicPulse pulse = isentropic_pulse_default();
  CHECK(pulse.gamma == doctest::Approx(5.0 / 3.0));

  // outside the pulse the gas is quiescent at the reference density
  const Prim1 far = pulse.prim_at(0.5);
  CHECK(far.rho == doctest::Approx(1e-7));
  CHECK(far.vel[0] == 0.0);
  CHECK(far.p == doctest::Approx(0.1 * std::pow(1e-7, 5.0 / 3.0)).epsilon(1e-12));

  // the Riemann invariant is the same everywhere
  const double jref =
      pulse.riemann_invariant(0.0, pulse.sound_speed(pulse.rho_ref));
  for (double x : {-0.29, -0.1, 0.0, 0.07, 0.22, 0.299, 0.4}) {
    const Prim1 v = pulse.prim_at(x);
    const double j = pulse.riemann_invariant(v.vel[0], pulse.sound_speed(v.rho));
    CHECK(j == doctest::Approx(jref).epsilon(1e-10));
    CHECK(v.valid());
  }
}

TEST_CASE("isentropic pulse: exact solution reduces to the initial data at t=0") {
  const IsentropicPulse pulse = isentropic_pulse_default();
  for (double x : {-0.2, 0.0, 0.15, 0.31}) {
    const Prim1 a = pulse.prim_at(x);
    const Prim1 b = pulse.exact(x, 0.0);
    CHECK(b.rho == doctest::Approx(a.rho).epsilon(1e-12));
    CHECK(b.vel[0] == doctest::Approx(a.vel[0]).epsilon(1e-12));
  }
}

TEST_CASE("isentropic pulse: characteristics stay straight and keep the invariant") {
  const IsentropicPulse pulse = isentropic_pulse_default();
  const double t = 0.02;
  const double jref = pulse.riemann_invariant(0.0, pulse.sound_speed(pulse.rho_ref));
  for (double x : {-0.1, 0.05, 0.2, 0.3, 0.4}) {
    const double x0 = pulse.characteristic_foot(x, t);
    const Prim1 v0 = pulse.prim_at(x0);
    const double cs = pulse.sound_speed(v0.rho);
    const double lam = (v0.vel[0] + cs) / (1.0 + v0.vel[0] * cs);
    CHECK(x0 + lam * t == doctest::Approx(x).epsilon(1e-12));
    const Prim1 v = pulse.exact(x, t);
    CHECK(pulse.riemann_invariant(v.vel[0], pulse.sound_speed(v.rho)) ==
          doctest::Approx(jref).epsilon(1e-10));
  }
}

TEST_CASE("blast interaction problem data") {
  const Problem1D& p = problem_1d("blast_interaction");
  CHECK(p.gamma == doctest::Approx(1.4));
  CHECK(p.t_final == doctest::Approx(0.43));
  CHECK(p.initial(0.05).p == doctest::Approx(1000.0));
  CHECK(p.initial(0.5).p == doctest::Approx(0.01));
  CHECK(p.initial(0.95).p == doctest::Approx(100.0));
  const GasModel g(p.gamma);
  for (double x : {0.05, 0.5, 0.95})
    CHECK(admissible(prim_to_cons(p.initial(x), g)));
}

TEST_CASE("boosted vortex: extremes, subluminal speeds, map roundtrip") {
  const BoostedVortex vx = boosted_vortex_default();
  // paper-quoted extremes at the vortex core
  const Prim2 core = vx.steady({0.0, 0.0});
  CHECK(core.rho == doctest::Approx(7.8e-15).epsilon(2.0));
  CHECK(core.rho > 1e-15);
  CHECK(core.rho < 5e-14);
  CHECK(core.p > 1e-21);
  CHECK(core.p < 1e-19);

  for (double r : {0.1, 0.7, 1.3, 2.5, 4.9})
    for (double a : {0.3, 2.0, 4.0}) {
      const Vec2 x{r * std::cos(a), r * std::sin(a)};
      const Prim2 v = vx.steady(x);
      CHECK(v.valid());
      const Prim2 vb = vx.exact(x, 0.37);
      CHECK(vb.valid());
    }

  for (double t : {0.0, 0.4, 1.0}) {
    const Vec2 xp{1.3, -2.1};
    const Vec2 lab = vx.lab_coords(xp, t);
    const Vec2 back = vx.moving_coords(lab, t);
    CHECK(back[0] == doctest::Approx(xp[0]).epsilon(1e-12));
    CHECK(back[1] == doctest::Approx(xp[1]).epsilon(1e-12));
  }

  // without the boost the solution is steady
  BoostedVortex still = vx;
  still.boost = 0.0;
  const Prim2 a = still.exact({0.6, 0.8}, 0.0);
  const Prim2 b = still.exact({0.6, 0.8}, 0.9);
  CHECK(a.rho == doctest::Approx(b.rho).epsilon(1e-14));
  CHECK(a.vel[0] == doctest::Approx(b.vel[0]).epsilon(1e-14));

  // far field moves diagonally with speed w
  const Prim2 far = vx.exact({4.9, -4.9}, 0.0);
  CHECK(std::sqrt(far.vel2()) == doctest::Approx(vx.boost).epsilon(1e-6));
  CHECK(far.vel[0] == doctest::Approx(far.vel[1]).epsilon(1e-6));
}

TEST_CASE("steady vortex satisfies the stationary equations (finite differences)") {
  const BoostedVortex vx = boosted_vortex_default();
  const GasModel g(vx.gamma);
  auto flux = [&](const Vec2& x, int comp, int dir) {
    const Prim2 v = vx.steady(x);
    const Cons2 u = prim_to_cons(v, g);
    const double un = v.vel[dir];
    switch (comp) {
      case 0: return u.D * un;
      case 1: return u.mom[0] * un + (dir == 0 ? v.p : 0.0);
      case 2: return u.mom[1] * un + (dir == 1 ? v.p : 0.0);
      default: return (u.E + v.p) * un;
    }
  };
  const double h = 1e-5;
  for (const Vec2 x : {Vec2{0.4, 0.2}, Vec2{-0.8, 0.5}, Vec2{1.2, -0.9}}) {
    for (int comp = 0; comp < 4; ++comp) {
      const double div =
          (flux({x[0] + h, x[1]}, comp, 0) - flux({x[0] - h, x[1]}, comp, 0)) / (2 * h) +
          (flux({x[0], x[1] + h}, comp, 1) - flux({x[0], x[1] - h}, comp, 1)) / (2 * h);
      CHECK(std::abs(div) < 1e-6);
    }
  }
}

TEST_CASE("boosted vortex solves the time-dependent equations (finite differences)") {
  const BoostedVortex vx = boosted_vortex_default();
  const GasModel g(vx.gamma);
  auto cons = [&](const Vec2& x, double t) { return prim_to_cons(vx.exact(x, t), g); };
  auto flux = [&](const Vec2& x, double t, int comp, int dir) {
    const Prim2 v = vx.exact(x, t);
    const Cons2 u = prim_to_cons(v, g);
    const double un = v.vel[dir];
    switch (comp) {
      case 0: return u.D * un;
      case 1: return u.mom[0] * un + (dir == 0 ? v.p : 0.0);
      case 2: return u.mom[1] * un + (dir == 1 ? v.p : 0.0);
      default: return (u.E + v.p) * un;
    }
  };
  auto comp_of = [](const Cons2& u, int c) {
    return c == 0 ? u.D : (c == 1 ? u.mom[0] : (c == 2 ? u.mom[1] : u.E));
  };
  const double h = 1e-5;
  const double t = 0.3;
  for (const Vec2 x : {Vec2{0.1, -0.4}, Vec2{-0.7, 0.6}}) {
    for (int c = 0; c < 4; ++c) {
      const double dt =
          (comp_of(cons(x, t + h), c) - comp_of(cons(x, t - h), c)) / (2 * h);
      const double div =
          (flux({x[0] + h, x[1]}, t, c, 0) - flux({x[0] - h, x[1]}, t, c, 0)) / (2 * h) +
          (flux({x[0], x[1] + h}, t, c, 1) - flux({x[0], x[1] - h}, t, c, 1)) / (2 * h);
      CHECK(std::abs(dt + div) < 1e-5);
    }
  }
}

TEST_CASE("blast family data") {
  const GasModel g14(1.4);
  const Problem2D& cart = problem_2d("cartesian_blast");
  const Prim2 inner = cart.initial({0.2, 0.2});
  CHECK(inner.rho == doctest::Approx(1e-10));
  CHECK(inner.p == doctest::Approx(1.0));
  const Prim2 outer = cart.initial({0.7, 0.7});
  CHECK(outer.rho == doctest::Approx(1e-12));
  CHECK(outer.p == doctest::Approx(0.05));
  CHECK(admissible(prim_to_cons(inner, g14)));
  CHECK(admissible(prim_to_cons(outer, g14)));

  const Problem2D& imp = problem_2d("implosion");
  const Prim2 v = imp.initial({0.3, 0.4});
  CHECK(v.p == doctest::Approx(1e-12));
  CHECK(std::sqrt(v.vel2()) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(v.vel[0] < 0.0);
  CHECK(v.vel[1] < 0.0);

  const Problem2D& icf = problem_2d("icf");
  CHECK(icf.gamma == doctest::Approx(5.0 / 3.0));
  CHECK(icf.initial({0.5, 0.5}).p == doctest::Approx(5e9));
  CHECK(icf.initial({0.95, 0.0}).p == doctest::Approx(1e11));
  CHECK(icf.boundary.drive_pressure({1.0, 0.0}) == doctest::Approx(1.05e12));
  const double th = M_PI / 6.0;
  CHECK(icf.boundary.drive_pressure({std::cos(th), std::sin(th)}) ==
        doctest::Approx(0.95e12));

  const Problem2D& strong = problem_2d("strong_blast");
  CHECK(strong.initial({0.1, 0.1}).p == doctest::Approx(1.0));
  CHECK(strong.initial({0.8, 0.1}).p == doctest::Approx(1e-12));
  CHECK(strong.initial({0.8, 0.1}).rho == doctest::Approx(1.0));
}

TEST_CASE("polar mesh construction") {
  const Problem2D& p = problem_2d("polar_blast");
  const GasModel g(p.gamma);
  const Mesh2D m = build_mesh_2d(p, 10, 4, g);
  // origin column is fully merged
  for (int j = 0; j <= 4; ++j) {
    CHECK(m.v(0, j)[0] == 0.0);
    CHECK(m.v(0, j)[1] == 0.0);
  }
  // wall rows sit exactly on the axes
  for (int i = 0; i <= 10; ++i) {
    CHECK(m.v(i, 0)[1] == 0.0);
    CHECK(m.v(i, 4)[0] == 0.0);
  }
  for (const Cons2& u : m.avg) CHECK(admissible(u));
}

TEST_CASE("error norms: exact match gives zero, and the Cauchy-Schwarz bound holds") {
  const GasModel g(5.0 / 3.0);
  const Problem1D& prob = problem_1d("isentropic_pulse");
  Mesh1D m = build_mesh_1d(prob, 40, g);

  // trivially zero when comparing against the field that generated the averages
  const ErrorNorms z = error_norms_1d(
      m, [&](double x, double) { return prob.initial(x); }, g);
  CHECK(z.e1 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(z.einf == doctest::Approx(0.0).epsilon(1e-12));

  // against a shifted field the norms are positive and obey e2 <= sqrt(e1 einf)
  const ErrorNorms n = error_norms_1d(
      m, [&](double x, double) { return prob.initial(x - 0.05); }, g);
  CHECK(n.e1 > 0.0);
  CHECK(n.e2 <= std::sqrt(n.e1 * n.einf) * (1.0 + 1e-12));
}
