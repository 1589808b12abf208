#pragma once

// From a symmetric Monge patch z = f(x,y) to the normal variational equation
// along the planar geodesic, its normal form w'' = r(y) w, and the full
// singularity profile of r.

#include <geogal/expr.hpp>
#include <geogal/numfield.hpp>
#include <geogal/quadext.hpp>
#include <geogal/ratfun.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gg {

struct SymmetryViolated : std::runtime_error {
  explicit SymmetryViolated(const Rat& y)
      : std::runtime_error("f_x(0,y) does not vanish (witness y = " + rat_to_string(y) + ")"),
        witness_y(y) {}
  Rat witness_y;
};

struct MongeSurface {
  Expr f;
  // true when the x -> -x symmetry was verified exactly; false when it was
  // only checked numerically at sample points (transcendental surfaces)
  bool symmetry_exact = true;
};

// sample points used by the probabilistic checks (first 20 that evaluate)
inline std::vector<Rat> symmetry_sample_points() {
  std::vector<Rat> pts;
  for (long k = 1; pts.size() < 40; ++k) {
    pts.push_back(make_rat(2 * k + 1, 7));
    pts.push_back(make_rat(-(2 * k + 3), 5));
  }
  return pts;
}

inline MongeSurface make_surface(const Expr& f) {
  if (depends_on(f, Var::Z))
    throw std::invalid_argument("surface must be a function of x and y only");
  Expr fx0 = substitute(differentiate(f, Var::X), Var::X, Expr::number(0L));
  if (!has_fun_node(fx0)) {
    RatFun g = to_ratfun(fx0, Var::Y);
    if (!g.is_zero()) {
      // find a witness point that is not a root of the numerator
      for (const Rat& y : symmetry_sample_points()) {
        if (g.den().eval(y) == 0) continue;
        if (g.num().eval(y) != 0) throw SymmetryViolated(y);
      }
      throw SymmetryViolated(Rat(0));
    }
    return MongeSurface{f, true};
  }
  int checked = 0;
  for (const Rat& y : symmetry_sample_points()) {
    if (checked >= 20) break;
    try {
      CIv v = eval_interval(fx0, {{Var::Y, CIv(y)}}, 128);
      if (v.excludes_zero()) throw SymmetryViolated(y);
      ++checked;
    } catch (const DivisionByZeroPossible&) {
      continue;
    }
  }
  return MongeSurface{f, false};
}

// xi'' + a xi' + b xi = 0 in the y parameterization
struct NVECoefficients {
  RatFun a, b;
};

inline NVECoefficients derive_nve(const MongeSurface& s) {
  if (has_fun_node(s.f)) throw NotRational();
  Expr zero = Expr::number(0L);
  Expr fy = substitute(differentiate(s.f, Var::Y), Var::X, zero);
  Expr fyy = substitute(differentiate(differentiate(s.f, Var::Y), Var::Y), Var::X, zero);
  Expr fxx = substitute(differentiate(differentiate(s.f, Var::X), Var::X), Var::X, zero);
  RatFun ry = to_ratfun(fy, Var::Y);
  RatFun ryy = to_ratfun(fyy, Var::Y);
  RatFun rxx = to_ratfun(fxx, Var::Y);
  RatFun metric = RatFun::constant(Rat(1), 'y') + ry * ry;  // 1 + f_y^2
  NVECoefficients out;
  out.a = -(ry * ryy) / metric;
  out.b = (ryy * rxx) / metric;
  return out;
}

// w'' = r w with w = xi * exp( int a/2 )
struct NormalFormODE {
  RatFun r;
  RatFun half_a;  // logarithmic derivative of the eliminating multiplier
};

inline NormalFormODE normal_form(const NVECoefficients& c) {
  RatFun quarter = RatFun::constant(make_rat(1, 4), c.a.var());
  RatFun half = RatFun::constant(make_rat(1, 2), c.a.var());
  NormalFormODE out;
  out.r = c.a * c.a * quarter + c.a.derivative() * half - c.b;
  out.half_a = c.a * half;
  return out;
}

// Per-singular-point data, grouped by square-free denominator factor.  The
// E-set is attached by the Kovacic stage.
struct PointData {
  bool at_infinity = false;
  Poly factor{'y'};
  int multiplicity = 0;
  Rat beta;
  bool beta_constant = true;
  Poly delta_rep{'t'};  // element of Q[t]/(factor); zero at infinity
  bool delta_zero = true;
  bool delta_constant = true;
  Rat one_plus_4beta;
  QuadExt tau_plus, tau_minus;
  std::vector<long> eset;
};

struct SingularityProfile {
  RatFun r;
  std::vector<PointData> finite;
  PointData infinity;
  bool fuchsian = true;
  bool supported = true;
  std::string unsupported_reason;
  Rat beta_inf_from_traces;  // sum over (beta_j + delta_j a_j), when fuchsian
};

inline void fill_indicial(PointData& p) {
  p.one_plus_4beta = Rat(1) + Rat(4) * p.beta;
  p.tau_plus = QuadExt::make(make_rat(1, 2), make_rat(1, 2), p.one_plus_4beta);
  p.tau_minus = QuadExt::make(make_rat(1, 2), make_rat(-1, 2), p.one_plus_4beta);
}

inline SingularityProfile singularity_profile(const NormalFormODE& o) {
  SingularityProfile out;
  out.r = o.r;
  const RatFun& r = o.r;

  // finite poles
  PartialFractions pf;
  bool finite_fuchsian = true;
  try {
    pf = partial_fractions(r);
  } catch (const PoleOrderTooHigh&) {
    finite_fuchsian = false;
  }
  if (!finite_fuchsian) {
    out.fuchsian = false;
    for (const auto& f : squarefree_factorization(r.den()).factors) {
      PointData p;
      p.factor = f.factor;
      p.multiplicity = f.multiplicity;
      out.finite.push_back(std::move(p));
    }
    return out;
  }

  // decay at infinity: pole orders <= 2 and y^2 r(y) bounded
  bool inf_regular = r.is_zero() ||
                     (pf.poly_part.is_zero() && r.den().degree() - r.num().degree() >= 2);

  for (const auto& term : pf.terms) {
    PointData p;
    p.factor = term.factor;
    p.multiplicity = term.multiplicity;
    // all per-root data lives in Q[t]/(q)
    Poly q('t', std::vector<Rat>(term.factor.coeffs()));
    Poly u('t', std::vector<Rat>(term.u.coeffs()));
    Poly v('t', std::vector<Rat>(term.v.coeffs()));
    Poly w = ctx_inverse(q.derivative(), q);  // q square-free: q' invertible mod q
    Poly w2 = poly_mod(w * w, q);
    if (term.multiplicity == 2) {
      Poly beta_rep = poly_mod(v * w2, q);
      p.beta_constant = beta_rep.degree() <= 0;
      if (!p.beta_constant) {
        out.supported = false;
        out.unsupported_reason = "beta varies across the roots of " + term.factor.to_string();
        p.beta = Rat(0);
      } else {
        p.beta = beta_rep.constant_term();
      }
      Poly w3 = poly_mod(w2 * w, q);
      p.delta_rep = poly_mod(v.derivative() * w2 - v * q.derivative().derivative() * w3 + u * w, q);
    } else {
      p.beta = Rat(0);
      p.delta_rep = poly_mod(u * w, q);
    }
    p.delta_zero = p.delta_rep.is_zero();
    p.delta_constant = p.delta_rep.degree() <= 0;
    if (p.beta_constant) fill_indicial(p);
    out.finite.push_back(std::move(p));
  }

  out.fuchsian = inf_regular;
  if (!out.fuchsian) return out;

  // point at infinity
  out.infinity.at_infinity = true;
  out.infinity.multiplicity = 0;
  if (!r.is_zero() && r.den().degree() - r.num().degree() == 2)
    out.infinity.beta = r.num().lc();  // denominator is monic
  else
    out.infinity.beta = Rat(0);
  fill_indicial(out.infinity);

  // cross-check: beta_inf equals the trace sum over all finite points
  if (out.supported) {
    Rat trace(0);
    for (const auto& p : out.finite) {
      Poly q_t('t', std::vector<Rat>(p.factor.coeffs()));
      Poly formula =
          poly_mod(Poly::constant(p.beta, 't') + p.delta_rep * Poly::identity('t'), q_t);
      trace += sum_over_roots(formula, q_t);
    }
    out.beta_inf_from_traces = trace;
    if (trace != out.infinity.beta)
      throw std::logic_error("singularity_profile: trace identity for beta_inf failed");
  }
  return out;
}

// ---------------------------------------------------------------------------
// the PDE candidate test  y f_xx - f_y = 0  (derivatives at x = 0)

enum class PdeVerdict { Pass, PlausiblyPass, Fail };

struct PdeResult {
  PdeVerdict verdict = PdeVerdict::Fail;
  bool exact_mode = true;
  std::optional<RatFun> residual;  // exact mode
  std::optional<Rat> witness;      // numeric-mode failure point
};

inline PdeResult pde_candidate_test(const Expr& f) {
  Expr zero = Expr::number(0L);
  Expr fy = substitute(differentiate(f, Var::Y), Var::X, zero);
  Expr fxx = substitute(differentiate(differentiate(f, Var::X), Var::X), Var::X, zero);
  Expr residual = Expr::symbol(Var::Y) * fxx - fy;
  PdeResult out;
  if (!has_fun_node(residual)) {
    out.exact_mode = true;
    RatFun g = to_ratfun(residual, Var::Y);
    out.residual = g;
    out.verdict = g.is_zero() ? PdeVerdict::Pass : PdeVerdict::Fail;
    return out;
  }
  out.exact_mode = false;
  int checked = 0;
  for (const Rat& y : symmetry_sample_points()) {
    if (checked >= 20) break;
    try {
      CIv v = eval_interval(residual, {{Var::Y, CIv(y)}}, 128);
      if (v.excludes_zero()) {
        out.verdict = PdeVerdict::Fail;
        out.witness = y;
        return out;
      }
      ++checked;
    } catch (const DivisionByZeroPossible&) {
      continue;
    }
  }
  out.verdict = PdeVerdict::PlausiblyPass;
  return out;
}

// The x^n y^n z = 1 family reduces to the Monge patch z = (x^2-y^2)^-n.
inline Expr family_surface(long n) {
  if (n < 1) throw std::invalid_argument("family index n must be >= 1");
  return Expr::pow(parse_expr("x^2-y^2"), -n);
}

}  // namespace gg
