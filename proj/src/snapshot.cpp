#include "lagrhd/snapshot.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lagrhd/errors.hpp"

namespace lagrhd {

namespace {

void put(std::FILE* f, double x, bool last = false) {
  std::fprintf(f, "%.17g%c", x, last ? '\n' : ',');
}

struct FileCloser {
  std::FILE* f;
  ~FileCloser() {
    if (f) std::fclose(f);
  }
};

} // namespace

void write_snapshot_1d(const std::string& path, const Mesh1D& m, const GasModel& g,
                       const std::vector<unsigned char>& theta_flag) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw ParseError("cannot open snapshot file for writing: " + path);
  FileCloser closer{f};
  std::fprintf(f, "i,x_left,x_right,D,mx,E,rho,ux,p,theta_flag\n");
  for (int i = 0; i < m.size(); ++i) {
    const Prim1 v = cons_to_prim(m.avg[i], g);
    std::fprintf(f, "%d,", i);
    put(f, m.node[i]);
    put(f, m.node[i + 1]);
    put(f, m.avg[i].D);
    put(f, m.avg[i].mom[0]);
    put(f, m.avg[i].E);
    put(f, v.rho);
    put(f, v.vel[0]);
    put(f, v.p);
    std::fprintf(f, "%d\n", theta_flag.empty() ? 0 : (int)theta_flag[i]);
  }
}

void write_snapshot_2d(const std::string& path, const Mesh2D& m, const GasModel& g,
                       const std::vector<unsigned char>& theta_flag) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw ParseError("cannot open snapshot file for writing: " + path);
  FileCloser closer{f};
  std::fprintf(f, "i,j,x1,y1,x2,y2,x3,y3,x4,y4,D,mx,my,E,rho,ux,uy,p,theta_flag\n");
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const Cons2& u = m.cell(i, j);
      const Prim2 v = cons_to_prim(u, g);
      std::fprintf(f, "%d,%d,", i, j);
      for (const Vec2& c : m.corners(i, j)) {
        put(f, c[0]);
        put(f, c[1]);
      }
      put(f, u.D);
      put(f, u.mom[0]);
      put(f, u.mom[1]);
      put(f, u.E);
      put(f, v.rho);
      put(f, v.vel[0]);
      put(f, v.vel[1]);
      put(f, v.p);
      std::fprintf(f, "%d\n", theta_flag.empty() ? 0 : (int)theta_flag[m.cidx(i, j)]);
    }
}

SnapshotData read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open snapshot file: " + path);
  std::string header;
  std::getline(in, header);
  const bool is2d = header.rfind("i,j,", 0) == 0;

  SnapshotData out;
  out.dim = is2d ? 2 : 1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> cols;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) cols.push_back(std::stod(tok));
    if (is2d) {
      if (cols.size() != 19) throw ParseError("snapshot row has wrong column count");
      out.cons2.push_back({cols[10], {cols[11], cols[12]}, cols[13]});
    } else {
      if (cols.size() != 10) throw ParseError("snapshot row has wrong column count");
      out.cons1.push_back({cols[3], {cols[4]}, cols[5]});
    }
  }
  return out;
}

} // namespace lagrhd
