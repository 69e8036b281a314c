#include "lagrhd/fuzz.hpp"

#include <cmath>
#include <sstream>

#include "lagrhd/hllc.hpp"

namespace lagrhd {

namespace {

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double u01() { return (next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * u01(); }
  double logu(double a, double b) {
    return std::pow(10.0, uniform(std::log10(a), std::log10(b)));
  }
};

double pick_gamma(Rng& rng) {
  const double g[3] = {4.0 / 3.0, 1.4, 5.0 / 3.0};
  return g[rng.next() % 3];
}

constexpr double kSlack = 1e-12;

struct Checker {
  FuzzReport* rep;
  std::ostringstream inputs;

  void check(bool ok, const char* name) {
    if (ok) return;
    ++rep->violations;
    if (rep->counterexamples.size() < 10)
      rep->counterexamples.push_back(std::string(name) + " | " + inputs.str());
  }
};

// lemma checks shared by the 1D and split-2D suites; un is the normal velocity
// and mt the tangential momentum (zero in 1D)
void check_lemma(Checker& ck, double sm, double sp, double sstar, double am, double ap,
                 double bm, double bp, const double d[2], const double mn[2],
                 const double e[2], const double un[2], const double mt[2],
                 const double p[2]) {
  const double sa_m = std::abs(sm * e[0]) + std::abs(mn[0]);
  const double sa_p = std::abs(sp * e[1]) + std::abs(mn[1]);
  const double sb_m = std::abs(mn[0] * (sm - un[0])) + p[0];
  const double sb_p = std::abs(mn[1] * (sp - un[1])) + p[1];

  ck.check(am < kSlack * sa_m, "lemma(i): A- < 0");
  ck.check(ap > -kSlack * sa_p, "lemma(i): A+ > 0");
  ck.check(am - bm < kSlack * (sa_m + sb_m), "lemma(ii): A- - B- < 0");
  ck.check(ap + bp > -kSlack * (sa_p + sb_p), "lemma(ii): A+ + B+ > 0");
  ck.check(sm * am - bm > -kSlack * (sa_m + sb_m), "lemma(iii): s-A- - B- > 0");
  ck.check(sp * ap - bp > -kSlack * (sa_p + sb_p), "lemma(iii): s+A+ - B+ > 0");
  ck.check(sp * am - bm < kSlack * (sa_m + sb_m), "lemma(iv): s+A- - B- < 0");
  ck.check(sm * ap - bp < kSlack * (sa_p + sb_p), "lemma(iv): s-A+ - B+ < 0");
  ck.check(sm < un[0] && un[0] < sp, "lemma(v): s- < un- < s+");
  ck.check(sm < un[1] && un[1] < sp, "lemma(v): s- < un+ < s+");
  ck.check(sm < sstar && sstar < sp, "lemma(v): s- < s* < s+");
  for (int k = 0; k < 2; ++k) {
    const double a = k == 0 ? am : ap;
    const double b = k == 0 ? bm : bp;
    const double s = k == 0 ? sm : sp;
    const double scale = (std::abs(a) + std::abs(b)) * (std::abs(a) + std::abs(b));
    ck.check(4.0 * a * a - (s * a + b) * (s * a + b) > -kSlack * scale,
             k == 0 ? "lemma(vi): left" : "lemma(vi): right");
    const double rel = s - un[k];
    const double scale7 = a * a + b * b + d[k] * d[k] * rel * rel + mt[k] * mt[k] * rel * rel;
    ck.check(a * a - b * b - d[k] * d[k] * rel * rel - mt[k] * mt[k] * rel * rel >
                 -kSlack * scale7,
             k == 0 ? "lemma(vii): left" : "lemma(vii): right");
  }
}

Prim2 sample_prim2(Rng& rng, bool axis_only = false) {
  const double rho = rng.logu(1e-10, 1e4);
  const double p = rng.logu(1e-10, 1e4);
  const double gl = rng.uniform(1.0, 100.0);
  const double umag = std::sqrt(std::max(0.0, 1.0 - 1.0 / (gl * gl)));
  const double phi = axis_only ? (rng.next() % 2 ? 0.0 : 3.14159265358979323846)
                               : rng.uniform(0.0, 2.0 * 3.14159265358979323846);
  return {rho, {umag * std::cos(phi), umag * std::sin(phi)}, p};
}

} // namespace

FuzzReport fuzz_hllc_1d(std::uint64_t seed, long samples, bool corrupt) {
  FuzzReport rep;
  Rng rng(seed);
  for (long k = 0; k < samples; ++k) {
    ++rep.samples;
    const GasModel gas(pick_gamma(rng));
    Prim1 pl, pr;
    {
      const Prim2 a = sample_prim2(rng, true);
      const Prim2 b = sample_prim2(rng, true);
      pl = {a.rho, {a.vel[0]}, a.p};
      pr = {b.rho, {b.vel[0]}, b.p};
    }
    const Cons1 ul = prim_to_cons(pl, gas);
    const Cons1 ur = prim_to_cons(pr, gas);

    Checker ck{&rep, {}};
    ck.inputs << "gamma=" << gas.gamma << " L=(" << pl.rho << "," << pl.vel[0] << ","
              << pl.p << ") R=(" << pr.rho << "," << pr.vel[0] << "," << pr.p << ")";
    try {
      auto bounds = wave_speed_bounds(pl, pr, gas);
      if (corrupt) {
        bounds[0] *= 0.3;
        bounds[1] *= 0.3;
      }
      const double am = bounds[0] * ul.E - ul.mom[0];
      const double ap = bounds[1] * ur.E - ur.mom[0];
      const double bm = ul.mom[0] * (bounds[0] - pl.vel[0]) - pl.p;
      const double bp = ur.mom[0] * (bounds[1] - pr.vel[0]) - pr.p;
      const auto c = contact_solve(am, ap, bm, bp, bounds[0], bounds[1]);

      const double d[2] = {ul.D, ur.D};
      const double mn[2] = {ul.mom[0], ur.mom[0]};
      const double e[2] = {ul.E, ur.E};
      const double un[2] = {pl.vel[0], pr.vel[0]};
      const double mt[2] = {0.0, 0.0};
      const double pp[2] = {pl.p, pr.p};
      check_lemma(ck, bounds[0], bounds[1], c[0], am, ap, bm, bp, d, mn, e, un, mt, pp);

      const Cons1 starl = intermediate_state_1d(ul, pl.p, pl.vel[0], bounds[0], c[0], c[1]);
      const Cons1 starr = intermediate_state_1d(ur, pr.p, pr.vel[0], bounds[1], c[0], c[1]);
      ck.check(starl.D > 0 && q_margin(starl) > -kSlack * starl.E, "star-left admissible");
      ck.check(starr.D > 0 && q_margin(starr) > -kSlack * starr.E, "star-right admissible");

      const double pl_expr = (c[0] * am - bm) / (1.0 - bounds[0] * c[0]);
      const double pr_expr = (c[0] * ap - bp) / (1.0 - bounds[1] * c[0]);
      const double ptol = 1e-10 * std::max(std::abs(pl_expr), std::abs(pr_expr)) +
                          kSlack * (std::abs(am) + std::abs(ap) + std::abs(bm) + std::abs(bp));
      ck.check(std::abs(pl_expr - pr_expr) <= ptol, "p* expressions agree");
    } catch (const std::exception& ex) {
      ck.check(false, ex.what());
    }
  }
  return rep;
}

FuzzReport fuzz_hllc_2d(std::uint64_t seed, long samples, bool corrupt) {
  FuzzReport rep;
  Rng rng(seed);
  for (long k = 0; k < samples; ++k) {
    ++rep.samples;
    const GasModel gas(pick_gamma(rng));
    const Prim2 pl = sample_prim2(rng);
    const Prim2 pr = sample_prim2(rng);
    const Cons2 ul = prim_to_cons(pl, gas);
    const Cons2 ur = prim_to_cons(pr, gas);

    Checker ck{&rep, {}};
    ck.inputs << "gamma=" << gas.gamma << " L=(" << pl.rho << "," << pl.vel[0] << ","
              << pl.vel[1] << "," << pl.p << ") R=(" << pr.rho << "," << pr.vel[0] << ","
              << pr.vel[1] << "," << pr.p << ")";
    try {
      auto bounds = wave_speed_bounds_normal(pl, pr, gas);
      if (corrupt) {
        bounds[0] *= 0.3;
        bounds[1] *= 0.3;
      }
      const double am = bounds[0] * ul.E - ul.mom[0];
      const double ap = bounds[1] * ur.E - ur.mom[0];
      const double bm = ul.mom[0] * (bounds[0] - pl.vel[0]) - pl.p;
      const double bp = ur.mom[0] * (bounds[1] - pr.vel[0]) - pr.p;
      const auto c = contact_solve(am, ap, bm, bp, bounds[0], bounds[1]);

      const double d[2] = {ul.D, ur.D};
      const double mn[2] = {ul.mom[0], ur.mom[0]};
      const double e[2] = {ul.E, ur.E};
      const double un[2] = {pl.vel[0], pr.vel[0]};
      const double mt[2] = {ul.mom[1], ur.mom[1]};
      const double pp[2] = {pl.p, pr.p};
      check_lemma(ck, bounds[0], bounds[1], c[0], am, ap, bm, bp, d, mn, e, un, mt, pp);

      auto star = [&](const Cons2& u, const Prim2& v, double s) {
        const double rel = s - v.vel[0];
        const double inv = 1.0 / (s - c[0]);
        return Cons2{u.D * rel * inv,
                     {(u.mom[0] * rel + c[1] - v.p) * inv, u.mom[1] * rel * inv},
                     (u.E * rel + c[1] * c[0] - v.p * v.vel[0]) * inv};
      };
      const Cons2 sl = star(ul, pl, bounds[0]);
      const Cons2 sr = star(ur, pr, bounds[1]);
      ck.check(sl.D > 0 && q_margin(sl) > -kSlack * sl.E, "star-left admissible");
      ck.check(sr.D > 0 && q_margin(sr) > -kSlack * sr.E, "star-right admissible");
    } catch (const std::exception& ex) {
      ck.check(false, ex.what());
    }
  }
  return rep;
}

FuzzReport fuzz_recovery(std::uint64_t seed, long samples) {
  FuzzReport rep;
  Rng rng(seed);
  for (long k = 0; k < samples; ++k) {
    ++rep.samples;
    const GasModel gas(pick_gamma(rng));
    Prim2 v = sample_prim2(rng);
    v.rho = rng.logu(1e-12, 1e6);
    v.p = rng.logu(1e-12, 1e6);

    Checker ck{&rep, {}};
    ck.inputs << "gamma=" << gas.gamma << " V=(" << v.rho << "," << v.vel[0] << ","
              << v.vel[1] << "," << v.p << ")";
    try {
      const double cs = sound_speed(v, gas);
      rep.max_cs2_excess = std::max(rep.max_cs2_excess, cs * cs - (gas.gamma - 1.0));
      ck.check(cs * cs < (gas.gamma - 1.0) * (1.0 + kSlack), "cs^2 < gamma - 1");

      const Cons2 u = prim_to_cons(v, gas);
      ck.check(u.D > 0.0 && q_margin(u) > -kSlack * u.E, "prim_to_cons image admissible");
      const Prim2 w = cons_to_prim(u, gas);
      const Cons2 u2 = prim_to_cons(w, gas);

      double err = 0.0;
      err = std::max(err, std::abs(u2.D - u.D) / u.D);
      err = std::max(err, std::abs(u2.E - u.E) / u.E);
      for (int c = 0; c < 2; ++c)
        err = std::max(err,
                       std::abs(u2.mom[c] - u.mom[c]) / std::max(std::abs(u.mom[c]), u.E));
      rep.max_roundtrip_error = std::max(rep.max_roundtrip_error, err);
      ck.check(err < 1e-10, "conserved roundtrip < 1e-10");
    } catch (const std::exception& ex) {
      ck.check(false, ex.what());
    }
  }
  return rep;
}

} // namespace lagrhd
