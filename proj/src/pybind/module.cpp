#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lagrhd/char_basis.hpp"
#include "lagrhd/fuzz.hpp"
#include "lagrhd/hllc.hpp"
#include "lagrhd/runner.hpp"

namespace py = pybind11;
using namespace lagrhd;

namespace {

RunConfig config_from_kwargs(const std::string& problem, int order, int n, int ny,
                             double cfl, double t_final, const std::string& output_dir,
                             int levels, RunMode mode) {
  std::ostringstream os;
  os << "problem = " << problem << "\norder = " << order << "\nN = " << n << "\n";
  if (ny > 0) os << "Ny = " << ny << "\n";
  os << "lambda = " << cfl << "\n";
  if (t_final > 0) os << "t_final = " << t_final << "\n";
  os << "output_dir = " << output_dir << "\nlevels = " << levels << "\n";
  return parse_config(os.str(), mode);
}

py::dict summary_dict(const RunSummary& s) {
  py::dict d;
  d["problem"] = s.problem;
  d["order"] = s.order;
  d["n"] = s.n;
  d["ny"] = s.ny;
  d["steps"] = s.steps;
  d["final_time"] = s.final_time;
  d["min_rho"] = s.min_rho;
  d["min_p"] = s.min_p;
  d["theta_fraction"] = s.theta_fraction;
  d["totals"] = py::make_tuple(s.total_d, s.total_mx, s.total_my, s.total_e);
  if (s.has_err) d["errors"] = py::make_tuple(s.err.e1, s.err.e2, s.err.einf);
  d["wall_seconds"] = s.wall_seconds;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lagrangian finite-volume schemes for special relativistic hydrodynamics";

  py::register_exception<NonConvergence>(m, "NonConvergenceError");
  py::register_exception<StepRejected>(m, "StepRejectedError");
  py::register_exception<TangledCell>(m, "TangledCellError");
  py::register_exception<ParseError>(m, "ConfigError");

  m.def(
      "prim_to_cons",
      [](double rho, std::vector<double> vel, double p, double gamma) {
        const GasModel g(gamma);
        if (vel.size() == 1) {
          const Cons1 u = prim_to_cons(Prim1{rho, {vel[0]}, p}, g);
          return py::make_tuple(u.D, py::make_tuple(u.mom[0]), u.E);
        }
        const Cons2 u = prim_to_cons(Prim2{rho, {vel[0], vel[1]}, p}, g);
        return py::make_tuple(u.D, py::make_tuple(u.mom[0], u.mom[1]), u.E);
      },
      py::arg("rho"), py::arg("vel"), py::arg("p"), py::arg("gamma"));

  m.def(
      "cons_to_prim",
      [](double D, std::vector<double> mom, double E, double gamma) {
        const GasModel g(gamma);
        if (mom.size() == 1) {
          const Prim1 v = cons_to_prim(Cons1{D, {mom[0]}, E}, g);
          return py::make_tuple(v.rho, py::make_tuple(v.vel[0]), v.p);
        }
        const Prim2 v = cons_to_prim(Cons2{D, {mom[0], mom[1]}, E}, g);
        return py::make_tuple(v.rho, py::make_tuple(v.vel[0], v.vel[1]), v.p);
      },
      py::arg("D"), py::arg("mom"), py::arg("E"), py::arg("gamma"));

  m.def(
      "sound_speed",
      [](double rho, double p, double gamma) {
        return sound_speed_rho_p(rho, p, GasModel(gamma));
      },
      py::arg("rho"), py::arg("p"), py::arg("gamma"));

  m.def(
      "eigen_speeds",
      [](double u, double cs) {
        const auto s = eigen_speeds1(u, cs);
        return py::make_tuple(s[0], s[1]);
      },
      py::arg("u"), py::arg("cs"));

  m.def(
      "admissible",
      [](double D, std::vector<double> mom, double E) {
        if (mom.size() == 1) return admissible(Cons1{D, {mom[0]}, E});
        return admissible(Cons2{D, {mom[0], mom[1]}, E});
      },
      py::arg("D"), py::arg("mom"), py::arg("E"));

  m.def(
      "hllc_flux_1d",
      [](py::tuple left, py::tuple right, double gamma) {
        const GasModel g(gamma);
        auto unpack = [](py::tuple t) {
          return Cons1{t[0].cast<double>(), {t[1].cast<double>()}, t[2].cast<double>()};
        };
        const WaveFan1 fan = hllc_flux(unpack(left), unpack(right), g);
        py::dict d;
        d["s_left"] = fan.s_left;
        d["s_right"] = fan.s_right;
        d["s_contact"] = fan.s_contact;
        d["p_contact"] = fan.p_contact;
        d["flux"] = py::make_tuple(fan.flux[0], fan.flux[1], fan.flux[2]);
        d["star_left"] = py::make_tuple(fan.star_left.D, fan.star_left.mom[0], fan.star_left.E);
        d["star_right"] =
            py::make_tuple(fan.star_right.D, fan.star_right.mom[0], fan.star_right.E);
        return d;
      },
      py::arg("left"), py::arg("right"), py::arg("gamma"));

  m.def(
      "hllc_flux_2d",
      [](py::tuple left, py::tuple right, py::tuple normal, double gamma) {
        const GasModel g(gamma);
        auto unpack = [](py::tuple t) {
          return Cons2{t[0].cast<double>(),
                       {t[1].cast<double>(), t[2].cast<double>()},
                       t[3].cast<double>()};
        };
        const Vec2 n{normal[0].cast<double>(), normal[1].cast<double>()};
        const WaveFan2 fan = hllc_flux_normal(unpack(left), unpack(right),
                                              EdgeFrame::from_normal(n, 1.0), g);
        py::dict d;
        d["s_contact"] = fan.s_contact;
        d["p_contact"] = fan.p_contact;
        d["flux"] = py::make_tuple(fan.flux_global[0], fan.flux_global[1],
                                   fan.flux_global[2], fan.flux_global[3]);
        return d;
      },
      py::arg("left"), py::arg("right"), py::arg("normal"), py::arg("gamma"));

  m.def("problem_names", &problem_names);

  m.def(
      "run",
      [](const std::string& problem, int order, int n, int ny, double cfl, double t_final,
         const std::string& output_dir) {
        set_threads_from_env();
        const RunConfig cfg =
            config_from_kwargs(problem, order, n, ny, cfl, t_final, output_dir, 1,
                               RunMode::run);
        return summary_dict(run_problem(cfg));
      },
      py::arg("problem"), py::arg("order") = 1, py::arg("n") = 40, py::arg("ny") = 0,
      py::arg("cfl") = 0.5, py::arg("t_final") = -1.0, py::arg("output_dir") = ".");

  m.def(
      "converge",
      [](const std::string& problem, int order, int n, int ny, int levels,
         const std::string& output_dir) {
        set_threads_from_env();
        const RunConfig cfg = config_from_kwargs(problem, order, n, ny, 0.5, -1.0,
                                                 output_dir, levels, RunMode::converge);
        py::list rows;
        for (const auto& r : run_convergence(cfg)) {
          py::dict d;
          d["n"] = r.n;
          d["e1"] = r.err.e1;
          d["e2"] = r.err.e2;
          d["einf"] = r.err.einf;
          d["order1"] = r.order1;
          d["theta_fraction"] = r.theta_fraction;
          rows.append(d);
        }
        return rows;
      },
      py::arg("problem"), py::arg("order") = 1, py::arg("n") = 20, py::arg("ny") = 0,
      py::arg("levels") = 3, py::arg("output_dir") = ".");

  m.def(
      "fuzz",
      [](std::uint64_t seed, long samples) {
        py::dict d;
        const FuzzReport a = fuzz_hllc_1d(seed, samples);
        const FuzzReport b = fuzz_hllc_2d(seed + 1, samples);
        const FuzzReport c = fuzz_recovery(seed + 2, samples);
        d["violations"] = a.violations + b.violations + c.violations;
        d["samples"] = a.samples + b.samples + c.samples;
        d["max_roundtrip_error"] = c.max_roundtrip_error;
        return d;
      },
      py::arg("seed") = 1, py::arg("samples") = 10000);
}
