#ifndef LAGRHD_RECONSTRUCT1D_HPP
#define LAGRHD_RECONSTRUCT1D_HPP

#include <array>

namespace lagrhd {

// Geometry factors for reconstructing inside cell i from averages of
// {i-1, i, i+1} on a nonuniform grid; knots are x_{i-3/2} .. x_{i+3/2}.
struct ReconGeom1D {
  double inv_dc_l, inv_dc_r;  // 1 / centroid spacing, left / right pair
  double off_l, off_r;        // interface position minus centroid of cell i
  double width;               // cell i width
  // optimal linear weights of the {left, right} candidate polynomials,
  // at the left and right interface of cell i
  std::array<double, 2> d_left, d_right;
};

ReconGeom1D recon_geom_1d(double x0, double x1, double x2, double x3);

// Third-order WENO value pair {at left interface, at right interface} from the
// three cell averages (w_prev, w self, w_next). The smoothness regularisation is
// relative to the larger indicator so the result is invariant under rescaling
// of the reconstructed variable.
std::array<double, 2> weno3_point_values(const ReconGeom1D& gm, double wm, double w0,
                                         double wp, double eps_weno);

// Second-order variant: minmod-limited linear slope.
std::array<double, 2> minmod_point_values(const ReconGeom1D& gm, double wm, double w0,
                                          double wp);

} // namespace lagrhd

#endif
