#include "lagrhd/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "lagrhd/errors.hpp"
#include "lagrhd/problems.hpp"

namespace lagrhd {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Diag {
  std::vector<std::string> errors;
  void add(int line, const std::string& key, const std::string& reason) {
    std::ostringstream os;
    os << "line " << line << ": key '" << key << "': " << reason;
    errors.push_back(os.str());
  }
};

bool to_double(const std::string& s, double& out) {
  try {
    size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

bool to_long(const std::string& s, long& out) {
  try {
    size_t pos = 0;
    out = std::stol(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

} // namespace

RunConfig parse_config(const std::string& text, RunMode mode) {
  RunConfig cfg;
  cfg.mode = mode;
  Diag diag;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      diag.add(lineno, line, "expected 'key = value'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    double d = 0;
    long l = 0;

    if (key == "problem") {
      cfg.problem = val;
    } else if (key == "order") {
      if (to_long(val, l))
        cfg.order = (int)l;
      else
        diag.add(lineno, key, "not an integer");
    } else if (key == "N") {
      if (to_long(val, l) && l >= 4)
        cfg.n = (int)l;
      else
        diag.add(lineno, key, "need an integer >= 4");
    } else if (key == "Ny") {
      if (to_long(val, l) && l >= 2)
        cfg.ny = (int)l;
      else
        diag.add(lineno, key, "need an integer >= 2");
    } else if (key == "lambda") {
      if (to_double(val, d) && d > 0.0 && d <= 0.5)
        cfg.cfl = d;
      else
        diag.add(lineno, key, "CFL number must lie in (0, 1/2]");
    } else if (key == "t_final") {
      if (to_double(val, d) && d > 0.0)
        cfg.t_final = d;
      else
        diag.add(lineno, key, "need a positive number");
    } else if (key == "output_dir") {
      cfg.output_dir = val;
    } else if (key == "snapshot_interval") {
      if (to_double(val, d) && d >= 0.0)
        cfg.snapshot_interval = d;
      else
        diag.add(lineno, key, "need a nonnegative number");
    } else if (key == "seed") {
      if (to_long(val, l) && l >= 0)
        cfg.seed = (std::uint64_t)l;
      else
        diag.add(lineno, key, "need a nonnegative integer");
    } else if (key == "samples") {
      if (to_long(val, l) && l > 0)
        cfg.samples = l;
      else
        diag.add(lineno, key, "need a positive integer");
    } else if (key == "levels") {
      if (to_long(val, l) && l >= 1 && l <= 12)
        cfg.levels = (int)l;
      else
        diag.add(lineno, key, "need an integer in [1, 12]");
    } else if (key == "corrupt") {
      if (val == "none" || val == "" || val == "wave_bounds")
        cfg.corrupt = (val == "none") ? "" : val;
      else
        diag.add(lineno, key, "unknown corruption mode");
    } else {
      diag.add(lineno, key, "unknown key");
    }
  }

  // cross-field validation
  if (mode != RunMode::fuzz) {
    if (cfg.problem.empty()) {
      diag.errors.push_back("missing required key 'problem'");
    } else if (is_problem_1d(cfg.problem)) {
      if (cfg.order < 1 || cfg.order > 3)
        diag.errors.push_back("unsupported order " + std::to_string(cfg.order) +
                              " (1D supports 1, 2, 3)");
    } else if (is_problem_2d(cfg.problem)) {
      if (cfg.order < 1 || cfg.order > 2)
        diag.errors.push_back("unsupported order " + std::to_string(cfg.order) +
                              " (2D supports 1, 2)");
    } else {
      diag.errors.push_back("unknown problem '" + cfg.problem + "'");
    }
    if (cfg.n <= 0) diag.errors.push_back("missing required key 'N'");
  }

  if (!diag.errors.empty()) {
    std::ostringstream os;
    os << "invalid configuration (" << diag.errors.size() << " problem(s)):";
    for (const auto& e : diag.errors) os << "\n  " << e;
    throw ParseError(os.str());
  }
  return cfg;
}

RunConfig load_config(const std::string& path, RunMode mode) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), mode);
}

} // namespace lagrhd
