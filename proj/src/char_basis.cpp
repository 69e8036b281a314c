#include "lagrhd/char_basis.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace lagrhd {

namespace {

// Null vector of a rank-2 3x3 matrix: cross product of the two most independent rows.
std::array<double, 3> kernel3(const double K[3][3]) {
  std::array<double, 3> best{};
  double bestn = -1.0;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    std::array<double, 3> c = {K[a][1] * K[b][2] - K[a][2] * K[b][1],
                               K[a][2] * K[b][0] - K[a][0] * K[b][2],
                               K[a][0] * K[b][1] - K[a][1] * K[b][0]};
    const double n = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
    if (n > bestn) {
      bestn = n;
      best = c;
    }
  }
  return best;
}

double det3(double a0, double a1, double a2, double b0, double b1, double b2, double c0,
            double c1, double c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

// Null vector of a rank-3 4x4 matrix: generalized cross product of the best row triple.
std::array<double, 4> kernel4(const double K[4][4]) {
  static const int triples[4][3] = {{0, 1, 3}, {0, 1, 2}, {0, 2, 3}, {1, 2, 3}};
  std::array<double, 4> best{};
  double bestn = -1.0;
  for (const auto& t : triples) {
    const double* r0 = K[t[0]];
    const double* r1 = K[t[1]];
    const double* r2 = K[t[2]];
    std::array<double, 4> c;
    c[0] = det3(r0[1], r0[2], r0[3], r1[1], r1[2], r1[3], r2[1], r2[2], r2[3]);
    c[1] = -det3(r0[0], r0[2], r0[3], r1[0], r1[2], r1[3], r2[0], r2[2], r2[3]);
    c[2] = det3(r0[0], r0[1], r0[3], r1[0], r1[1], r1[3], r2[0], r2[1], r2[3]);
    c[3] = -det3(r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]);
    const double n = c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
    if (n > bestn) {
      bestn = n;
      best = c;
    }
  }
  return best;
}

template <int M>
void normalize_column(std::array<double, M>& r) {
  double n = 0;
  int imax = 0;
  for (int i = 0; i < M; ++i) {
    n += r[i] * r[i];
    if (std::abs(r[i]) > std::abs(r[imax])) imax = i;
  }
  n = std::sqrt(n);
  if (!(n > 0.0)) throw DegenerateState("char_basis: zero eigenvector");
  const double s = (r[imax] < 0.0 ? -1.0 : 1.0) / n;
  for (int i = 0; i < M; ++i) r[i] *= s;
}

} // namespace

CharBasis<3> char_basis(const Cons1& u_ref, const GasModel& g) {
  return char_basis(cons_to_prim(u_ref, g), g);
}

CharBasis<3> char_basis(const Prim1& v, const GasModel& g) {
  const double u = v.vel[0];
  const double gp = g.gp();
  const double w = v.rho + gp * v.p;
  const double gl2 = 1.0 / (1.0 - u * u);
  const double gl = std::sqrt(gl2);
  const double cs = sound_speed(v, g);

  // dU/dV and dF/dV in primitive variables (rho, u, p)
  const double Mx[3][3] = {
      {gl, v.rho * gl2 * gl * u, 0.0},
      {gl2 * u, w * gl2 * (1.0 + 2.0 * gl2 * u * u), gp * gl2 * u},
      {gl2, 2.0 * w * gl2 * gl2 * u, gp * gl2 - 1.0}};
  const double Cx[3][3] = {
      {gl * u, v.rho * gl * (1.0 + gl2 * u * u), 0.0},
      {gl2 * u * u, 2.0 * w * gl2 * u * (1.0 + gl2 * u * u), gp * gl2 * u * u + 1.0},
      {gl2 * u, w * gl2 * (1.0 + 2.0 * gl2 * u * u), gp * gl2 * u}};

  const auto ac = eigen_speeds1(u, cs);
  CharBasis<3> basis;
  basis.lambda = {ac[0], u, ac[1]};

  std::array<std::array<double, 3>, 3> rv;  // right eigenvectors in primitive variables
  for (int side = 0; side < 2; ++side) {
    const double lam = ac[side];
    double K[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) K[i][j] = Cx[i][j] - lam * Mx[i][j];
    rv[side == 0 ? 0 : 2] = kernel3(K);
  }
  rv[1] = {1.0, 0.0, 0.0};  // contact: density perturbation at constant u, p

  Eigen::Matrix3d R;
  for (int c = 0; c < 3; ++c) {
    std::array<double, 3> ru{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ru[i] += Mx[i][j] * rv[c][j];
    normalize_column<3>(ru);
    for (int i = 0; i < 3; ++i) R(i, c) = ru[i];
  }

  Eigen::Matrix3d L = R.inverse();
  L = L * (2.0 * Eigen::Matrix3d::Identity() - R * L);  // one inverse-refinement pass
  if (!L.allFinite()) throw DegenerateState("char_basis: singular eigenvector matrix");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      basis.right[i][j] = R(i, j);
      basis.left[i][j] = L(i, j);
    }
  return basis;
}

CharBasis<4> char_basis_normal(const Cons2& u_ref, const GasModel& g) {
  return char_basis_normal(cons_to_prim(u_ref, g), g);
}

CharBasis<4> char_basis_normal(const Prim2& v, const GasModel& g) {
  const double un = v.vel[0];
  const double ut = v.vel[1];
  const double gp = g.gp();
  const double w = v.rho + gp * v.p;
  const double gl2 = 1.0 / (1.0 - un * un - ut * ut);
  const double gl = std::sqrt(gl2);
  const double gl4 = gl2 * gl2;

  const double Mx[4][4] = {
      {gl, v.rho * gl2 * gl * un, v.rho * gl2 * gl * ut, 0.0},
      {gl2 * un, w * gl2 * (1.0 + 2.0 * gl2 * un * un), 2.0 * w * gl4 * un * ut, gp * gl2 * un},
      {gl2 * ut, 2.0 * w * gl4 * un * ut, w * gl2 * (1.0 + 2.0 * gl2 * ut * ut), gp * gl2 * ut},
      {gl2, 2.0 * w * gl4 * un, 2.0 * w * gl4 * ut, gp * gl2 - 1.0}};
  const double Cx[4][4] = {
      {gl * un, v.rho * gl * (1.0 + gl2 * un * un), v.rho * gl2 * gl * un * ut, 0.0},
      {gl2 * un * un, 2.0 * w * gl2 * un * (1.0 + gl2 * un * un), 2.0 * w * gl4 * un * un * ut,
       gp * gl2 * un * un + 1.0},
      {gl2 * un * ut, w * gl2 * ut * (1.0 + 2.0 * gl2 * un * un),
       w * gl2 * un * (1.0 + 2.0 * gl2 * ut * ut), gp * gl2 * un * ut},
      {gl2 * un, w * gl2 * (1.0 + 2.0 * gl2 * un * un), 2.0 * w * gl4 * un * ut, gp * gl2 * un}};

  const auto ac = eigen_speeds_normal(v, g, {1.0, 0.0});
  CharBasis<4> basis;
  basis.lambda = {ac[0], un, un, ac[1]};

  std::array<std::array<double, 4>, 4> rv;
  for (int side = 0; side < 2; ++side) {
    const double lam = ac[side];
    double K[4][4];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) K[i][j] = Cx[i][j] - lam * Mx[i][j];
    rv[side == 0 ? 0 : 3] = kernel4(K);
  }
  rv[1] = {1.0, 0.0, 0.0, 0.0};  // contact
  rv[2] = {0.0, 0.0, 1.0, 0.0};  // shear

  Eigen::Matrix4d R;
  for (int c = 0; c < 4; ++c) {
    std::array<double, 4> ru{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) ru[i] += Mx[i][j] * rv[c][j];
    normalize_column<4>(ru);
    for (int i = 0; i < 4; ++i) R(i, c) = ru[i];
  }

  Eigen::Matrix4d L = R.inverse();
  L = L * (2.0 * Eigen::Matrix4d::Identity() - R * L);
  if (!L.allFinite()) throw DegenerateState("char_basis_normal: singular eigenvector matrix");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      basis.right[i][j] = R(i, j);
      basis.left[i][j] = L(i, j);
    }
  return basis;
}

} // namespace lagrhd
