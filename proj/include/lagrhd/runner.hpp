#ifndef LAGRHD_RUNNER_HPP
#define LAGRHD_RUNNER_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lagrhd/config.hpp"
#include "lagrhd/error_norms.hpp"
#include "lagrhd/problems.hpp"

namespace lagrhd {

struct RunSummary {
  std::string problem;
  int dim = 0, order = 0, n = 0, ny = 0;
  long steps = 0;
  double final_time = 0.0;
  double min_rho = 0.0, min_p = 0.0;
  double theta_fraction = 0.0;
  long singular_stencils = 0;
  double total_d = 0.0, total_mx = 0.0, total_my = 0.0, total_e = 0.0;
  ErrorNorms err;
  bool has_err = false;
  double wall_seconds = 0.0;  // reported on stdout, not part of the summary record
};

// Advances the configured problem to its final time, writing snapshots and a
// deterministic summary.csv under cfg.output_dir.
RunSummary run_problem(const RunConfig& cfg);

// Runs the refinement series n, 2n, ... and writes convergence.csv.
std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg);

// Randomised HLLC/admissibility/recovery suites; returns the number of
// violations and prints any counterexamples verbatim.
long run_fuzz(const RunConfig& cfg, std::ostream& log);

void set_threads_from_env();

} // namespace lagrhd

#endif
