#include "lagrhd/runner.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lagrhd/fuzz.hpp"
#include "lagrhd/snapshot.hpp"

namespace lagrhd {

namespace {

std::string snap_name(const std::string& dir, int k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%06d.csv", k);
  return dir + "/" + buf;
}

void write_summary(const std::string& dir, const RunSummary& s) {
  std::ofstream out(dir + "/summary.csv");
  out << "problem,order,N,Ny,steps,final_time,min_rho,min_p,theta_fraction,"
         "total_D,total_mx,total_my,total_E\n";
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                s.problem.c_str(), s.order, s.n, s.ny, s.steps, s.final_time, s.min_rho,
                s.min_p, s.theta_fraction, s.total_d, s.total_mx, s.total_my, s.total_e);
  out << buf;
}

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

RunSummary run_1d(const RunConfig& cfg) {
  const Problem1D& prob = problem_1d(cfg.problem);
  const GasModel gas(prob.gamma);
  SchemeConfig1D sc;
  sc.order = cfg.order;
  sc.cfl = cfg.cfl;
  sc.boundary = prob.boundary;
  Solver1D solver(gas, sc);
  Mesh1D mesh = build_mesh_1d(prob, cfg.n, gas);
  const double t_end = cfg.t_final > 0.0 ? cfg.t_final : prob.t_final;

  RunSummary sum;
  sum.problem = cfg.problem;
  sum.dim = 1;
  sum.order = cfg.order;
  sum.n = cfg.n;
  sum.min_rho = 1e300;
  sum.min_p = 1e300;
  Clock clock;

  std::filesystem::create_directories(cfg.output_dir);
  int snap = 0;
  write_snapshot_1d(snap_name(cfg.output_dir, snap++), mesh, gas, {});
  double next_snap = cfg.snapshot_interval > 0 ? cfg.snapshot_interval : 2.0 * t_end;

  long limited = 0, instances = 0;
  while (mesh.time < t_end * (1.0 - 1e-13)) {
    const double dt = std::min(solver.compute_dt(mesh), t_end - mesh.time);
    const StepStats1D st = solver.step(mesh, dt);
    ++sum.steps;
    limited += st.limited_cells;
    instances += st.cell_stage_instances;
    sum.min_rho = std::min(sum.min_rho, st.min_rho);
    sum.min_p = std::min(sum.min_p, st.min_p);
    if (mesh.time >= next_snap) {
      write_snapshot_1d(snap_name(cfg.output_dir, snap++),
                        mesh, gas,
                        std::vector<unsigned char>(solver.last_limited()));
      next_snap += cfg.snapshot_interval;
    }
  }
  write_snapshot_1d(snap_name(cfg.output_dir, snap++), mesh, gas,
                    std::vector<unsigned char>(solver.last_limited()));

  sum.final_time = mesh.time;
  sum.theta_fraction = instances > 0 ? (double)limited / (double)instances : 0.0;
  for (int i = 0; i < mesh.size(); ++i) {
    const double w = mesh.width(i);
    sum.total_d += mesh.avg[i].D * w;
    sum.total_mx += mesh.avg[i].mom[0] * w;
    sum.total_e += mesh.avg[i].E * w;
  }
  if (prob.exact) {
    sum.err = error_norms_1d(mesh, prob.exact, gas);
    sum.has_err = true;
  }
  sum.wall_seconds = clock.seconds();
  write_summary(cfg.output_dir, sum);
  return sum;
}

RunSummary run_2d(const RunConfig& cfg) {
  const Problem2D& prob = problem_2d(cfg.problem);
  const GasModel gas(prob.gamma);
  SchemeConfig2D sc;
  sc.order = cfg.order;
  sc.cfl = cfg.cfl;
  Solver2D solver(gas, sc, prob.boundary);
  const int ny = cfg.ny > 0 ? cfg.ny : cfg.n;
  Mesh2D mesh = build_mesh_2d(prob, cfg.n, ny, gas);
  const double t_end = cfg.t_final > 0.0 ? cfg.t_final : prob.t_final;

  RunSummary sum;
  sum.problem = cfg.problem;
  sum.dim = 2;
  sum.order = cfg.order;
  sum.n = cfg.n;
  sum.ny = ny;
  sum.min_rho = 1e300;
  sum.min_p = 1e300;
  Clock clock;

  std::filesystem::create_directories(cfg.output_dir);
  int snap = 0;
  write_snapshot_2d(snap_name(cfg.output_dir, snap++), mesh, gas, {});
  double next_snap = cfg.snapshot_interval > 0 ? cfg.snapshot_interval : 2.0 * t_end;

  long limited = 0, instances = 0;
  while (mesh.time < t_end * (1.0 - 1e-13)) {
    StepStats2D st;
    solver.step_auto(mesh, t_end - mesh.time, st);
    ++sum.steps;
    limited += st.limited_cells;
    instances += st.cell_stage_instances;
    sum.singular_stencils += st.singular_stencils;
    sum.min_rho = std::min(sum.min_rho, st.min_rho);
    sum.min_p = std::min(sum.min_p, st.min_p);
    if (mesh.time >= next_snap) {
      write_snapshot_2d(snap_name(cfg.output_dir, snap++), mesh, gas,
                        std::vector<unsigned char>(solver.last_limited()));
      next_snap += cfg.snapshot_interval;
    }
  }
  write_snapshot_2d(snap_name(cfg.output_dir, snap++), mesh, gas,
                    std::vector<unsigned char>(solver.last_limited()));

  sum.final_time = mesh.time;
  sum.theta_fraction = instances > 0 ? (double)limited / (double)instances : 0.0;
  for (int j = 0; j < mesh.ny; ++j)
    for (int i = 0; i < mesh.nx; ++i) {
      const double a = polygon_area(mesh.corners(i, j));
      sum.total_d += mesh.cell(i, j).D * a;
      sum.total_mx += mesh.cell(i, j).mom[0] * a;
      sum.total_my += mesh.cell(i, j).mom[1] * a;
      sum.total_e += mesh.cell(i, j).E * a;
    }
  if (prob.exact) {
    sum.err = error_norms_2d(mesh, prob.exact, gas);
    sum.has_err = true;
  }
  sum.wall_seconds = clock.seconds();
  write_summary(cfg.output_dir, sum);
  return sum;
}

} // namespace

RunSummary run_problem(const RunConfig& cfg) {
  if (is_problem_1d(cfg.problem)) return run_1d(cfg);
  return run_2d(cfg);
}

std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg) {
  std::vector<ConvergenceRow> rows;
  for (int lvl = 0; lvl < cfg.levels; ++lvl) {
    RunConfig c = cfg;
    c.n = cfg.n << lvl;
    c.ny = cfg.ny > 0 ? (cfg.ny << lvl) : 0;
    c.output_dir = cfg.output_dir + "/N" + std::to_string(c.n);
    const RunSummary s = run_problem(c);
    if (!s.has_err)
      throw ParseError("convergence mode needs a problem with an exact solution");
    ConvergenceRow row;
    row.n = c.n;
    row.err = s.err;
    row.theta_fraction = s.theta_fraction;
    if (!rows.empty()) {
      row.order1 = std::log2(rows.back().err.e1 / row.err.e1);
      row.order2 = std::log2(rows.back().err.e2 / row.err.e2);
      row.orderinf = std::log2(rows.back().err.einf / row.err.einf);
    }
    rows.push_back(row);
  }

  std::filesystem::create_directories(cfg.output_dir);
  std::ofstream out(cfg.output_dir + "/convergence.csv");
  out << "N,eps1,order1,eps2,order2,epsinf,orderinf,theta\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.6e,%.3f,%.6e,%.3f,%.6e,%.3f,%.6g\n", r.n, r.err.e1,
                  r.order1, r.err.e2, r.order2, r.err.einf, r.orderinf, r.theta_fraction);
    out << buf;
  }
  return rows;
}

long run_fuzz(const RunConfig& cfg, std::ostream& log) {
  const bool corrupt = cfg.corrupt == "wave_bounds";
  long violations = 0;

  auto report = [&](const char* name, const FuzzReport& r) {
    log << name << ": " << r.samples << " samples, " << r.violations << " violations\n";
    for (const auto& c : r.counterexamples) log << "  counterexample: " << c << "\n";
    violations += r.violations;
  };

  report("hllc_1d", fuzz_hllc_1d(cfg.seed, cfg.samples, corrupt));
  report("hllc_2d", fuzz_hllc_2d(cfg.seed + 1, cfg.samples, corrupt));
  const FuzzReport rec = fuzz_recovery(cfg.seed + 2, cfg.samples);
  log << "recovery: " << rec.samples << " samples, " << rec.violations
      << " violations, max roundtrip error " << rec.max_roundtrip_error << "\n";
  for (const auto& c : rec.counterexamples) log << "  counterexample: " << c << "\n";
  violations += rec.violations;
  return violations;
}

void set_threads_from_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("LAGRHD_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

} // namespace lagrhd
