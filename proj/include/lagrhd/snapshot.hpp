#ifndef LAGRHD_SNAPSHOT_HPP
#define LAGRHD_SNAPSHOT_HPP

#include <string>
#include <vector>

#include "lagrhd/scheme1d.hpp"
#include "lagrhd/scheme2d.hpp"

namespace lagrhd {

// Plain-text CSV snapshots, one row per cell, full double precision.
// 1D columns: i,x_left,x_right,D,mx,E,rho,ux,p,theta_flag
// 2D columns: i,j,x1,y1,...,x4,y4,D,mx,my,E,rho,ux,uy,p,theta_flag

void write_snapshot_1d(const std::string& path, const Mesh1D& m, const GasModel& g,
                       const std::vector<unsigned char>& theta_flag);
void write_snapshot_2d(const std::string& path, const Mesh2D& m, const GasModel& g,
                       const std::vector<unsigned char>& theta_flag);

struct SnapshotData {
  int dim = 0;
  std::vector<Cons1> cons1;
  std::vector<Cons2> cons2;
};

SnapshotData read_snapshot(const std::string& path);

} // namespace lagrhd

#endif
