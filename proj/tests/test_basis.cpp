#include <doctest.h>

#include <array>
#include <cmath>

#include "lagrhd/char_basis.hpp"

using namespace lagrhd;

namespace {

// lab-frame fluxes recovered through the pressure solve, for the
// finite-difference Jacobian oracle
std::array<double, 3> flux1(const Cons1& u, const GasModel& g) {
  const Prim1 v = cons_to_prim(u, g);
  return {u.D * v.vel[0], u.mom[0] * v.vel[0] + v.p, u.mom[0]};
}

std::array<double, 4> flux2(const Cons2& u, const GasModel& g) {
  const Prim2 v = cons_to_prim(u, g);
  return {u.D * v.vel[0], u.mom[0] * v.vel[0] + v.p, u.mom[1] * v.vel[0], u.mom[0]};
}

template <int M, class Flux, class State>
std::array<std::array<double, M>, M> fd_jacobian(const State& u, const GasModel& g,
                                                 Flux&& flux) {
  std::array<std::array<double, M>, M> jac{};
  auto vec = pack(u);
  for (int j = 0; j < M; ++j) {
    const double h = 1e-7 * std::max(1.0, std::abs(vec[j]));
    auto up = vec, um = vec;
    up[j] += h;
    um[j] -= h;
    State sp, sm;
    if constexpr (M == 3) {
      sp = unpack1(up);
      sm = unpack1(um);
    } else {
      sp = unpack2(up);
      sm = unpack2(um);
    }
    const auto fp = flux(sp, g);
    const auto fm = flux(sm, g);
    for (int i = 0; i < M; ++i) jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
  }
  return jac;
}

template <int M>
double eigen_residual(const std::array<std::array<double, M>, M>& a, const CharBasis<M>& b) {
  double worst = 0.0;
  for (int c = 0; c < M; ++c) {
    for (int i = 0; i < M; ++i) {
      double av = 0.0;
      for (int j = 0; j < M; ++j) av += a[i][j] * b.right[j][c];
      worst = std::max(worst, std::abs(av - b.lambda[c] * b.right[i][c]));
    }
  }
  return worst;
}

template <int M>
double lr_identity_error(const CharBasis<M>& b) {
  double worst = 0.0;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      double s = 0.0;
      for (int k = 0; k < M; ++k) s += b.left[i][k] * b.right[k][j];
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

} // namespace

TEST_CASE("1D basis: eigenvalues, inverse pair, Jacobian residual") {
  const GasModel g(1.4);
  const Prim1 states[] = {{1.0, {0.0}, 1.0}, {0.1, {0.9}, 2.0}, {3.0, {-0.6}, 1e-4},
                          {1e-6, {0.3}, 1e-2}};
  for (const Prim1& v : states) {
    const Cons1 u = prim_to_cons(v, g);
    const auto basis = char_basis(u, g);
    CHECK(lr_identity_error<3>(basis) < 1e-12);

    const double cs = sound_speed(v, g);
    const auto ac = eigen_speeds1(v.vel[0], cs);
    CHECK(basis.lambda[0] == doctest::Approx(ac[0]).epsilon(1e-12));
    CHECK(basis.lambda[1] == doctest::Approx(v.vel[0]).epsilon(1e-10));
    CHECK(basis.lambda[2] == doctest::Approx(ac[1]).epsilon(1e-12));

    const auto jac = fd_jacobian<3>(u, g, [](const Cons1& s, const GasModel& gg) {
      return flux1(s, gg);
    });
    CHECK(eigen_residual<3>(jac, basis) < 2e-5);
  }
}

TEST_CASE("1D basis at rest has eigenvalues (-cs, 0, cs)") {
  const GasModel g(1.4);
  const Prim1 v{1.0, {0.0}, 1.0};
  const auto basis = char_basis(prim_to_cons(v, g), g);
  const double cs = sound_speed(v, g);
  CHECK(basis.lambda[0] == doctest::Approx(-cs).epsilon(1e-13));
  CHECK(basis.lambda[1] == doctest::Approx(0.0));
  CHECK(basis.lambda[2] == doctest::Approx(cs).epsilon(1e-13));
}

TEST_CASE("2D normal basis: eigenvalues, inverse pair, Jacobian residual") {
  const GasModel g(5.0 / 3.0);
  const Prim2 states[] = {{1.0, {0.0, 0.0}, 1.0},
                          {0.5, {0.3, -0.7}, 2.0},
                          {2.0, {-0.2, 0.1}, 1e-3},
                          {1e-4, {0.6, 0.6}, 1e-6}};
  for (const Prim2& v : states) {
    const Cons2 u = prim_to_cons(v, g);
    const auto basis = char_basis_normal(u, g);
    CHECK(lr_identity_error<4>(basis) < 1e-11);

    const auto ac = eigen_speeds_normal(v, g, {1.0, 0.0});
    CHECK(basis.lambda[0] == doctest::Approx(ac[0]).epsilon(1e-12));
    CHECK(basis.lambda[1] == doctest::Approx(v.vel[0]).epsilon(1e-10));
    CHECK(basis.lambda[3] == doctest::Approx(ac[1]).epsilon(1e-12));

    const auto jac = fd_jacobian<4>(u, g, [](const Cons2& s, const GasModel& gg) {
      return flux2(s, gg);
    });
    CHECK(eigen_residual<4>(jac, basis) < 2e-4);
  }
}

TEST_CASE("characteristic transform roundtrip is the identity") {
  const GasModel g(1.4);
  const Cons1 u = prim_to_cons(Prim1{0.7, {0.4}, 0.9}, g);
  const auto basis = char_basis(u, g);
  const std::array<double, 3> x = {0.3, -1.2, 2.5};
  const auto back = basis.from_char(basis.to_char(x));
  for (int i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(x[i]).epsilon(1e-12));

  // constant cell data transforms to zero deviations and back
  const auto w = basis.to_char(pack(u - u));
  for (int i = 0; i < 3; ++i) CHECK(w[i] == 0.0);
}
