#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "lagrhd/errors.hpp"
#include "lagrhd/runner.hpp"

namespace {

int dispatch(const std::string& path, lagrhd::RunMode mode) {
  using namespace lagrhd;
  RunConfig cfg;
  try {
    cfg = load_config(path, mode);
  } catch (const ParseError& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return 2;
  }

  try {
    switch (mode) {
      case RunMode::run: {
        const RunSummary s = run_problem(cfg);
        const std::string nys = s.dim == 2 ? "x" + std::to_string(s.ny) : "";
        std::printf("%s order=%d N=%d%s: %ld steps to t=%.6g\n", s.problem.c_str(), s.order,
                    s.n, nys.c_str(), s.steps, s.final_time);
        std::printf("  min rho=%.3e  min p=%.3e  limited fraction=%.4g%%\n", s.min_rho,
                    s.min_p, 100.0 * s.theta_fraction);
        if (s.has_err)
          std::printf("  errors: e1=%.6e e2=%.6e einf=%.6e\n", s.err.e1, s.err.e2,
                      s.err.einf);
        std::printf("  wall time %.2f s\n", s.wall_seconds);
        return 0;
      }
      case RunMode::converge: {
        const auto rows = run_convergence(cfg);
        std::printf("%8s %12s %6s %12s %6s %12s %6s %8s\n", "N", "eps1", "ord1", "eps2",
                    "ord2", "epsinf", "ordinf", "theta%");
        for (const auto& r : rows)
          std::printf("%8d %12.4e %6.2f %12.4e %6.2f %12.4e %6.2f %8.3g\n", r.n, r.err.e1,
                      r.order1, r.err.e2, r.order2, r.err.einf, r.orderinf,
                      100.0 * r.theta_fraction);
        return 0;
      }
      case RunMode::fuzz: {
        const long violations = run_fuzz(cfg, std::cout);
        if (violations > 0) {
          std::printf("FAIL: %ld violations\n", violations);
          return 4;
        }
        std::printf("all randomized suites passed\n");
        return 0;
      }
    }
  } catch (const lagrhd::ParseError& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "numerical failure: " << ex.what() << "\n";
    return 3;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  lagrhd::set_threads_from_env();

  CLI::App app{"Lagrangian finite-volume solver for special relativistic hydrodynamics"};
  app.require_subcommand(1);

  std::string run_cfg, conv_cfg, fuzz_cfg;
  auto* run = app.add_subcommand("run", "advance a problem to its final time");
  run->add_option("config", run_cfg, "config file")->required();
  auto* conv = app.add_subcommand("converge", "run a refinement series");
  conv->add_option("config", conv_cfg, "config file")->required();
  auto* fuzz = app.add_subcommand("fuzz", "randomized solver property suites");
  fuzz->add_option("config", fuzz_cfg, "config file")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return dispatch(run_cfg, lagrhd::RunMode::run);
  if (conv->parsed()) return dispatch(conv_cfg, lagrhd::RunMode::converge);
  return dispatch(fuzz_cfg, lagrhd::RunMode::fuzz);
}
