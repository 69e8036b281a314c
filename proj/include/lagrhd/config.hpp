#ifndef LAGRHD_CONFIG_HPP
#define LAGRHD_CONFIG_HPP

#include <cstdint>
#include <string>

namespace lagrhd {

enum class RunMode { run, converge, fuzz };

struct RunConfig {
  RunMode mode = RunMode::run;
  std::string problem;
  int order = 1;
  int n = 0;
  int ny = 0;             // 2D only; defaults per problem when zero
  double cfl = 0.5;
  double t_final = -1.0;  // < 0: problem default
  std::string output_dir = ".";
  double snapshot_interval = 0.0;  // 0: initial and final only
  std::uint64_t seed = 1;
  long samples = 1000000;  // fuzz mode
  int levels = 5;          // converge mode: n, 2n, ..., n * 2^(levels-1)
  std::string corrupt;     // fuzz harness self-test: "", "wave_bounds"
};

// Parses the line-based `key = value` format ('#' comments). Collects every
// invalid key/value into a single diagnostic before giving up.
RunConfig parse_config(const std::string& text, RunMode mode);
RunConfig load_config(const std::string& path, RunMode mode);

} // namespace lagrhd

#endif
