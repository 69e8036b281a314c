#include "lagrhd/reconstruct1d.hpp"

#include <algorithm>
#include <cmath>

namespace lagrhd {

namespace {

// Coefficients of the three cell averages in the quadratic reconstruction
// (derivative of the cubic primitive-function interpolant) evaluated at x.
std::array<double, 3> quadratic_coeffs(double x0, double x1, double x2, double x3, double x) {
  const double a2 = 2.0 * x - x0 - x1;
  const double a3 =
      (x - x1) * (x - x2) + (x - x0) * (x - x2) + (x - x0) * (x - x1);
  const double i20 = 1.0 / (x2 - x0);
  const double i30 = 1.0 / (x3 - x0);
  const double i31 = 1.0 / (x3 - x1);
  return {1.0 - a2 * i20 + a3 * i30 * i20, a2 * i20 - a3 * i30 * (i20 + i31),
          a3 * i30 * i31};
}

} // namespace

ReconGeom1D recon_geom_1d(double x0, double x1, double x2, double x3) {
  ReconGeom1D gm;
  const double cm = 0.5 * (x0 + x1);
  const double c0 = 0.5 * (x1 + x2);
  const double cp = 0.5 * (x2 + x3);
  gm.inv_dc_l = 1.0 / (c0 - cm);
  gm.inv_dc_r = 1.0 / (cp - c0);
  gm.off_l = x1 - c0;
  gm.off_r = x2 - c0;
  gm.width = x2 - x1;

  const auto bl = quadratic_coeffs(x0, x1, x2, x3, x1);
  const auto br = quadratic_coeffs(x0, x1, x2, x3, x2);
  // candidate-poly coefficients of the outer averages at each interface
  const double al_l = -gm.inv_dc_l * gm.off_l;
  const double ar_l = gm.inv_dc_r * gm.off_l;
  const double al_r = -gm.inv_dc_l * gm.off_r;
  const double ar_r = gm.inv_dc_r * gm.off_r;
  gm.d_left = {bl[0] / al_l, bl[2] / ar_l};
  gm.d_right = {br[0] / al_r, br[2] / ar_r};
  return gm;
}

std::array<double, 2> weno3_point_values(const ReconGeom1D& gm, double wm, double w0,
                                         double wp, double eps_weno) {
  const double sl = (w0 - wm) * gm.inv_dc_l;
  const double sr = (wp - w0) * gm.inv_dc_r;
  const double bl = sl * gm.width * sl * gm.width;
  const double br = sr * gm.width * sr * gm.width;
  const double bmax = std::max(bl, br);
  if (bmax == 0.0) return {w0, w0};

  std::array<double, 2> out;
  const std::array<const std::array<double, 2>*, 2> dsets = {&gm.d_left, &gm.d_right};
  const std::array<double, 2> offs = {gm.off_l, gm.off_r};
  for (int k = 0; k < 2; ++k) {
    const double al = (*dsets[k])[0] / ((bl + eps_weno * bmax) * (bl + eps_weno * bmax));
    const double ar = (*dsets[k])[1] / ((br + eps_weno * bmax) * (br + eps_weno * bmax));
    const double slope = (al * sl + ar * sr) / (al + ar);
    out[k] = w0 + slope * offs[k];
  }
  return out;
}

std::array<double, 2> minmod_point_values(const ReconGeom1D& gm, double wm, double w0,
                                          double wp) {
  const double sl = (w0 - wm) * gm.inv_dc_l;
  const double sr = (wp - w0) * gm.inv_dc_r;
  double slope = 0.0;
  if (sl > 0.0 && sr > 0.0)
    slope = std::min(sl, sr);
  else if (sl < 0.0 && sr < 0.0)
    slope = std::max(sl, sr);
  return {w0 + slope * gm.off_l, w0 + slope * gm.off_r};
}

} // namespace lagrhd
