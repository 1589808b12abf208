// geogal: non-integrability analysis of geodesic flow on symmetric Monge
// patches.  Pipeline: surface -> NVE -> normal form w'' = r w -> singularity
// profile -> differential Galois classification; plus a numeric geodesic
// module for cross-checks.

#include <geogal/geom.hpp>
#include <geogal/kovacic.hpp>
#include <geogal/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

namespace {

using namespace gg;

int default_threads() {
  if (const char* env = std::getenv("GG_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void emit(const Report& rep, const std::string& json_path) {
  if (!json_path.empty()) {
    nlohmann::json j = rep;
    std::ofstream out(json_path);
    out << j.dump(2) << "\n";
  }
  print_report(std::cout, rep);
}

int exit_code_for(VerdictKind v) {
  return v == VerdictKind::NonIntegrable ? 0 : 2;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

int run_classification(Report rep, const RatFun& r, int threads, bool prefilter,
                       const std::string& json_path, Timer timer) {
  ClassifyOptions opts;
  opts.threads = threads;
  opts.interval_prefilter = prefilter;
  ClassifyResult res = classify(r, opts);
  fill_classification(rep, res);
  rep.runtime_seconds = timer.seconds();
  emit(rep, json_path);
  return exit_code_for(res.verdict);
}

int cmd_analyze(const std::string& ftext, int threads, bool prefilter,
                const std::string& json_path, const std::string& command = "analyze",
                const std::string& mode = "surface z = f(x,y)") {
  Timer timer;
  Report rep;
  rep.command = command;
  rep.input = ftext;
  rep.mode = mode;
  Expr f = parse_expr(ftext);
  MongeSurface surf = make_surface(f);
  rep.symmetry_exact = surf.symmetry_exact;
  if (!surf.symmetry_exact)
    rep.notes.push_back("surface symmetry verified numerically at sample points only");
  NVECoefficients co = derive_nve(surf);
  NormalFormODE nf = normal_form(co);
  rep.nve_a = co.a.to_string();
  rep.nve_b = co.b.to_string();
  rep.normal_form_r = nf.r.to_string();
  rep.multiplier_half_a = nf.half_a.to_string();
  rep.notes.push_back(
      "sign convention: w'' = r w with r = a^2/4 + a'/2 - b; flipping the sign of r "
      "changes every beta and the whole classification");
  return run_classification(std::move(rep), nf.r, threads, prefilter, json_path, timer);
}

int cmd_kovacic(const std::string& rtext, int threads, bool prefilter,
                const std::string& json_path) {
  Timer timer;
  Report rep;
  rep.command = "kovacic";
  rep.input = rtext;
  rep.mode = "w'' = r(y) w";
  Expr re = parse_expr(rtext);
  RatFun r = to_ratfun(re, Var::Y);
  rep.normal_form_r = r.to_string();
  return run_classification(std::move(rep), r, threads, prefilter, json_path, timer);
}

int cmd_family(long n, int threads, bool prefilter, const std::string& json_path) {
  Expr f = family_surface(n);
  return cmd_analyze(f.to_string(), threads, prefilter, json_path, "family",
                     "x^n y^n z = 1 with n = " + std::to_string(n));
}

int cmd_pde_test(const std::string& ftext, const std::string& json_path) {
  Timer timer;
  Report rep;
  rep.command = "pde-test";
  rep.input = ftext;
  rep.mode = "candidate test y f_xx - f_y = 0 at x = 0";
  Expr f = parse_expr(ftext);
  make_surface(f);  // validates the symmetry precondition
  PdeResult res = pde_candidate_test(f);
  switch (res.verdict) {
    case PdeVerdict::Pass: rep.pde_verdict = "pass"; break;
    case PdeVerdict::PlausiblyPass: rep.pde_verdict = "plausibly pass"; break;
    case PdeVerdict::Fail: rep.pde_verdict = "fail"; break;
  }
  rep.pde_mode = res.exact_mode ? "exact" : "numeric";
  if (res.residual) rep.pde_residual = res.residual->to_string();
  if (res.witness)
    rep.notes.push_back("nonzero residual certified at y = " + rat_to_string(*res.witness));
  rep.runtime_seconds = timer.seconds();
  emit(rep, json_path);
  return 0;
}

int cmd_geodesic(const std::string& Ftext, const std::string& ctext, const std::string& start,
                 const std::string& dir, unsigned seed, double length, double step,
                 const std::string& csv_path) {
  Expr F = parse_expr(Ftext);
  Expr ce = parse_expr(ctext);
  if (!ce.is_number()) throw std::invalid_argument("--c must be a rational constant");
  ImplicitSurface S(F, ce.num_value());
  auto parse_vec = [](const std::string& s) {
    Vec3 v{};
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &v[0], &v[1], &v[2]) != 3)
      throw std::invalid_argument("expected three comma-separated numbers: " + s);
    return v;
  };
  GeodesicState ic;
  ic.pos = parse_vec(start);
  if (std::abs(S.value(ic.pos) - S.level_d()) > 1e-9)
    throw std::invalid_argument("start point does not satisfy F = c");
  Vec3 g = S.gradient(ic.pos);
  Vec3 v{};
  if (dir == "random") {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    v = {u(rng), u(rng), u(rng)};
  } else {
    v = parse_vec(dir);
  }
  double proj = dot(v, g) / dot(g, g);
  for (int k = 0; k < 3; ++k) v[k] -= proj * g[k];
  double n = norm(v);
  if (n < 1e-12) throw std::invalid_argument("direction is parallel to the surface normal");
  for (int k = 0; k < 3; ++k) v[k] /= n;
  ic.vel = v;
  Trajectory tr = integrate_geodesic(S, ic, length, step);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    tr.write_csv(out);
  } else {
    tr.write_csv(std::cout);
  }
  std::cerr << "samples: " << tr.samples.size() << ", max |F - c| drift: " << tr.max_f_drift
            << ", max speed drift: " << tr.max_speed_drift << "\n";
  if (tr.fault) {
    std::cerr << "fault: " << tr.fault_reason << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differential Galois analysis of geodesic flow on symmetric Monge patches"};
  app.require_subcommand(1);

  std::string ftext, rtext, json_path, csv_path;
  std::string Ftext, ctext = "1", start = "1,1,1", dir = "random";
  long n = 1;
  int threads = default_threads();
  bool no_prefilter = false;
  unsigned seed = 0;
  double length = 5.0, step = 1e-3;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--json", json_path, "write the report as JSON to this path");
    cmd->add_option("--threads", threads, "worker threads for the case II search");
    cmd->add_flag("--no-prefilter", no_prefilter,
                  "disable the certified interval pre-filter (exact arithmetic only)");
  };

  auto* analyze = app.add_subcommand("analyze", "full pipeline for a surface z = f(x,y)");
  analyze->add_option("--f", ftext, "surface expression f(x,y)")->required();
  add_common(analyze);

  auto* kov = app.add_subcommand("kovacic", "classify w'' = r(y) w directly");
  kov->add_option("--r", rtext, "rational function r(y)")->required();
  add_common(kov);

  auto* fam = app.add_subcommand("family", "analyze the surface x^n y^n z = 1");
  fam->add_option("--n", n, "family index n >= 1")->required();
  add_common(fam);

  auto* pde = app.add_subcommand("pde-test", "integrability candidate test y f_xx - f_y = 0");
  pde->add_option("--f", ftext, "surface expression f(x,y)")->required();
  pde->add_option("--json", json_path, "write the report as JSON to this path");

  auto* geo = app.add_subcommand("geodesic", "integrate a geodesic on F(x,y,z) = c (CSV out)");
  geo->add_option("--F", Ftext, "implicit surface F(x,y,z)")->required();
  geo->add_option("--c", ctext, "level constant (rational)");
  geo->add_option("--start", start, "starting point x,y,z");
  geo->add_option("--dir", dir, "initial direction x,y,z or 'random'");
  geo->add_option("--seed", seed, "seed for --dir random");
  geo->add_option("--length", length, "arc length to integrate");
  geo->add_option("--step", step, "RK4 step size");
  geo->add_option("--csv", csv_path, "write trajectory CSV to this path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(ftext, threads, !no_prefilter, json_path);
    if (app.got_subcommand(kov)) return cmd_kovacic(rtext, threads, !no_prefilter, json_path);
    if (app.got_subcommand(fam)) {
      if (n < 1) {
        std::cerr << "error: family index n must be >= 1\n";
        return 1;
      }
      return cmd_family(n, threads, !no_prefilter, json_path);
    }
    if (app.got_subcommand(pde)) return cmd_pde_test(ftext, json_path);
    if (app.got_subcommand(geo))
      return cmd_geodesic(Ftext, ctext, start, dir, seed, length, step, csv_path);
  } catch (const ParseError& e) {
    std::cerr << "error [exprcore.parse]: " << e.what() << "\n";
    return 1;
  } catch (const SymmetryViolated& e) {
    std::cerr << "error [nve.make_surface]: " << e.what() << "\n";
    return 1;
  } catch (const NotRational& e) {
    std::cerr << "error [exprcore.to_ratfun]: " << e.what() << "\n";
    return 1;
  } catch (const WrongVariable& e) {
    std::cerr << "error [exprcore.to_ratfun]: " << e.what() << "\n";
    return 1;
  } catch (const PoleOrderTooHigh& e) {
    std::cerr << "error [exactalg.partial_fractions]: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error [input]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
