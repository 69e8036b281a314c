#ifndef LAGRHD_CHAR_BASIS_HPP
#define LAGRHD_CHAR_BASIS_HPP

#include <array>

#include "lagrhd/state.hpp"

namespace lagrhd {

// Left/right eigenvector pair of the flux Jacobian dF/dU at a reference state.
// Rows of `left` are left eigenvectors, columns of `right` are right eigenvectors,
// ordered by ascending eigenvalue; left * right = identity.
template <int M>
struct CharBasis {
  std::array<double, M> lambda;
  std::array<std::array<double, M>, M> left;
  std::array<std::array<double, M>, M> right;

  std::array<double, M> to_char(const std::array<double, M>& u) const {
    std::array<double, M> w{};
    for (int i = 0; i < M; ++i) {
      double s = 0;
      for (int j = 0; j < M; ++j) s += left[i][j] * u[j];
      w[i] = s;
    }
    return w;
  }
  std::array<double, M> from_char(const std::array<double, M>& w) const {
    std::array<double, M> u{};
    for (int i = 0; i < M; ++i) {
      double s = 0;
      for (int j = 0; j < M; ++j) s += right[i][j] * w[j];
      u[i] = s;
    }
    return u;
  }
};

inline std::array<double, 3> pack(const Cons1& u) { return {u.D, u.mom[0], u.E}; }
inline Cons1 unpack1(const std::array<double, 3>& a) { return {a[0], {a[1]}, a[2]}; }
inline std::array<double, 4> pack(const Cons2& u) { return {u.D, u.mom[0], u.mom[1], u.E}; }
inline Cons2 unpack2(const std::array<double, 4>& a) { return {a[0], {a[1], a[2]}, a[3]}; }

// 1D system (D, m, E).
CharBasis<3> char_basis(const Cons1& u_ref, const GasModel& g);
CharBasis<3> char_basis(const Prim1& v_ref, const GasModel& g);

// Normal-split 2D system (D, m_n, m_tau, E); the caller passes the state already
// rotated so that mom[0] is the normal momentum.
CharBasis<4> char_basis_normal(const Cons2& u_ref, const GasModel& g);
CharBasis<4> char_basis_normal(const Prim2& v_ref, const GasModel& g);

} // namespace lagrhd

#endif
