#pragma once

// Case II polynomial search.  For an assignment of integers e_j to singular
// points, theta = (1/2) sum e_j/(y - a_j) and a monic P of degree d must
// satisfy
//   P''' + 3 theta P'' + (3 theta^2 + 3 theta' - 4r) P'
//        + (theta'' + 3 theta theta' + theta^3 - 4 r theta - 2 r') P = 0.
// Multiplying by W = Q^3 * den(r), Q the product of the singular factors,
// turns this into a polynomial identity that is linear in P's coefficients.
//
// Two compatible evaluations of the same identity: certified rectangle
// arithmetic over the singular-point boxes (can only certify "no P"), and
// exact quotient-ring arithmetic over a lazily built splitting context.

#include <geogal/kovacic.hpp>

namespace gg {

// ---------------------------------------------------------------------------
// interval polynomials

class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<CIv> c) : c_(std::move(c)) { trim(); }

  static CPoly lift(const Poly& p) {
    std::vector<CIv> c;
    for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p[i]);
    return CPoly(std::move(c));
  }
  static CPoly linear_minus_root(const CIv& root) {
    return CPoly({-root, CIv(Rat(1))});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const CIv& operator[](int i) const {
    static const CIv zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
  }

  friend CPoly operator+(const CPoly& a, const CPoly& b) {
    std::vector<CIv> r(std::max(a.c_.size(), b.c_.size()), CIv(Rat(0)));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return CPoly(std::move(r));
  }
  friend CPoly operator-(const CPoly& a, const CPoly& b) {
    std::vector<CIv> r(std::max(a.c_.size(), b.c_.size()), CIv(Rat(0)));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return CPoly(std::move(r));
  }
  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.is_zero() || b.is_zero()) return CPoly();
    std::vector<CIv> r(a.c_.size() + b.c_.size() - 1, CIv(Rat(0)));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return CPoly(std::move(r));
  }
  CPoly scaled(const Rat& s) const {
    CPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }
  CPoly derivative() const {
    if (c_.size() <= 1) return CPoly();
    std::vector<CIv> r(c_.size() - 1, CIv(Rat(0)));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return CPoly(std::move(r));
  }
  CPoly shifted(int k) const {  // * y^k
    if (is_zero()) return *this;
    std::vector<CIv> r(c_.size() + k, CIv(Rat(0)));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return CPoly(std::move(r));
  }
  CPoly rounded(long prec) const {
    CPoly r = *this;
    for (auto& x : r.c_) x = x.round_out(prec);
    return r;
  }

 private:
  void trim() {
    // keep exact zeros off the top only; interval zeros stay (they carry width)
    while (!c_.empty() && c_.back().is_point() && c_.back().re().lo() == 0 &&
           c_.back().im().lo() == 0)
      c_.pop_back();
  }
  std::vector<CIv> c_;
};

// APoly helpers mirrored for the shared assembly
inline APoly apoly_shifted(const APoly& p, int k) {
  if (p.is_zero()) return p;
  std::vector<Poly> c(p.coeffs().size() + k, Poly('t'));
  for (size_t i = 0; i < p.coeffs().size(); ++i) c[i + k] = p.coeffs()[i];
  return APoly(p.ctx(), p.var(), std::move(c));
}

// ---------------------------------------------------------------------------
// the identity's pieces, shared between the exact and interval evaluations

template <class P>
struct PlongParts {
  P W, S1, S2, S3;
};

// T = numerator of theta over Q; N/D = r reduced; Q3_over_D = Q^3 / D.
template <class P>
PlongParts<P> build_plong_parts(const P& T, const P& Q, const P& N, const P& D,
                                const P& Q3_over_D) {
  P Qp = Q.derivative();
  P Tp = T.derivative();
  P TdQ = Tp * Q - T * Qp;  // numerator of theta' * Q^2
  P Q2 = Q * Q;
  P Q3 = Q2 * Q;
  PlongParts<P> parts;
  parts.W = Q3 * D;
  parts.S1 = (T * Q2 * D).scaled(Rat(3));
  parts.S2 = (T * T * Q * D).scaled(Rat(3)) + (TdQ * Q * D).scaled(Rat(3)) - (N * Q3).scaled(Rat(4));
  P Tpp = Tp.derivative();
  P Qpp = Qp.derivative();
  parts.S3 = ((Tpp * Q - T * Qpp) * Q - (Qp * TdQ).scaled(Rat(2))) * D +
             (T * TdQ).scaled(Rat(3)) * D + T * T * T * D - (N * T * Q2).scaled(Rat(4)) -
             ((N.derivative() * D - N * D.derivative()) * Q3_over_D).scaled(Rat(2));
  return parts;
}

// K_i = W * L(y^i): the column of the linear system contributed by p_i.
template <class P, class ShiftFn>
std::vector<P> build_plong_columns(const PlongParts<P>& parts, long d, ShiftFn shift) {
  std::vector<P> cols;
  for (long i = 0; i <= d; ++i) {
    P k = shift(parts.S3, static_cast<int>(i));
    if (i >= 1) k = k + shift(parts.S2, static_cast<int>(i - 1)).scaled(Rat(i));
    if (i >= 2) k = k + shift(parts.S1, static_cast<int>(i - 2)).scaled(Rat(i * (i - 1)));
    if (i >= 3) k = k + shift(parts.W, static_cast<int>(i - 3)).scaled(Rat(i * (i - 1) * (i - 2)));
    cols.push_back(std::move(k));
  }
  return cols;
}

// ---------------------------------------------------------------------------
// per-assignment class structure

struct ValueClass {
  long value = 0;
  std::vector<int> roots;  // box indices within the factor
};

inline std::vector<ValueClass> value_classes(const std::vector<long>& e_per_root) {
  std::vector<ValueClass> classes;
  for (int i = 0; i < static_cast<int>(e_per_root.size()); ++i) {
    long v = e_per_root[i];
    bool found = false;
    for (auto& c : classes)
      if (c.value == v) {
        c.roots.push_back(i);
        found = true;
        break;
      }
    if (!found) classes.push_back({v, {i}});
  }
  return classes;
}

inline bool assignment_needs_algebra(const SingularityProfile& prof, const Assignment& a) {
  for (size_t f = 0; f < prof.finite.size(); ++f)
    if (value_classes(a.e_per_factor[f]).size() > 1) return true;
  return false;
}

// ---------------------------------------------------------------------------
// interval route: certify "no P" via a (d+1)-minor of [A|b] excluding zero

namespace detail {

// Determinant of a small interval matrix by subset dynamic programming over
// column sets, expanding along successive rows.  The per-level cofactor sign
// convention is off by a global factor of +-1, which does not matter for the
// excludes-zero test.
inline CIv interval_det(const std::vector<std::vector<CIv>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<CIv> memo(1u << n, CIv(Rat(0)));
  std::vector<bool> have(1u << n, false);
  memo[0] = CIv(Rat(1));
  have[0] = true;
  std::function<CIv(unsigned)> det = [&](unsigned mask) -> CIv {
    if (have[mask]) return memo[mask];
    int k = __builtin_popcount(mask);
    CIv acc(Rat(0));
    int sign = 1;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      CIv sub = det(mask & ~(1u << col));
      CIv term = m[k - 1][col] * sub;
      acc = sign > 0 ? acc + term : acc - term;
      sign = -sign;
    }
    memo[mask] = acc;
    have[mask] = true;
    return acc;
  };
  return det((1u << n) - 1);
}

// greedy pivot-row selection on complex midpoints
inline std::vector<int> select_rows(const std::vector<std::vector<std::complex<double>>>& a,
                                    int want) {
  const int rows = static_cast<int>(a.size());
  const int cols = want;
  std::vector<std::vector<std::complex<double>>> w = a;
  std::vector<bool> used(rows, false);
  std::vector<int> picked;
  for (int c = 0; c < cols; ++c) {
    int best = -1;
    double best_mag = 0;
    for (int r2 = 0; r2 < rows; ++r2) {
      if (used[r2]) continue;
      double mag = std::abs(w[r2][c]);
      if (mag > best_mag) {
        best_mag = mag;
        best = r2;
      }
    }
    if (best < 0) {
      for (int r2 = 0; r2 < rows && best < 0; ++r2)
        if (!used[r2]) best = r2;
    }
    if (best < 0) break;
    used[best] = true;
    picked.push_back(best);
    if (best_mag > 0)
      for (int r2 = 0; r2 < rows; ++r2) {
        if (used[r2] || w[r2][c] == std::complex<double>(0, 0)) continue;
        std::complex<double> f = w[r2][c] / w[best][c];
        for (int cc = 0; cc < cols; ++cc) w[r2][cc] -= f * w[best][cc];
      }
  }
  return picked;
}

}  // namespace detail

struct FactorBoxes {
  Poly q;                  // monic square-free factor (var y)
  std::vector<CIv> boxes;  // sorted; refined on demand
};

inline std::vector<FactorBoxes> profile_boxes(const SingularityProfile& prof) {
  std::vector<FactorBoxes> out;
  for (const auto& pt : prof.finite) {
    FactorBoxes fb;
    fb.q = pt.factor.monic();
    fb.boxes = isolate_roots(fb.q);
    out.push_back(std::move(fb));
  }
  return out;
}

// true => certified: no P of degree d exists for this assignment
inline bool interval_rules_out(const RatFun& r, const Assignment& a,
                               std::vector<FactorBoxes>& boxes, long prec) {
  const long wp = prec + 32;
  // refine boxes to the working precision
  Rat eps = make_rat(Int(1), Int(1) << prec);
  for (auto& fb : boxes) {
    Poly dq = fb.q.derivative();
    for (auto& b : fb.boxes)
      if (!(b.width() < eps)) b = refine_root_box(fb.q, dq, b, eps);
  }

  CPoly Q = CPoly::lift(Poly::constant(Rat(1), 'y'));
  for (const auto& fb : boxes) Q = Q * CPoly::lift(fb.q);

  // theta numerator
  CPoly T;
  for (size_t f = 0; f < boxes.size(); ++f) {
    auto classes = value_classes(a.e_per_factor[f]);
    // product of the other factors (exact)
    Poly others = Poly::constant(Rat(1), 'y');
    for (size_t f2 = 0; f2 < boxes.size(); ++f2)
      if (f2 != f) others *= boxes[f2].q;
    std::vector<CPoly> gs;
    for (const auto& c : classes) {
      CPoly g = CPoly::lift(Poly::constant(Rat(1), 'y'));
      for (int idx : c.roots) g = (g * CPoly::linear_minus_root(boxes[f].boxes[idx])).rounded(wp);
      gs.push_back(std::move(g));
    }
    for (size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].value == 0) continue;
      CPoly term = gs[c].derivative();
      for (size_t c2 = 0; c2 < classes.size(); ++c2)
        if (c2 != c) term = (term * gs[c2]).rounded(wp);
      term = (term * CPoly::lift(others)).rounded(wp);
      T = T + term.scaled(make_rat(classes[c].value, 2));
    }
  }

  Poly Qr = Poly::constant(Rat(1), 'y');
  for (const auto& fb : boxes) Qr *= fb.q;
  Poly Q3_over_D = poly_div_exact(Qr * Qr * Qr, r.den());

  auto parts = build_plong_parts<CPoly>(T, Q, CPoly::lift(r.num()), CPoly::lift(r.den()),
                                        CPoly::lift(Q3_over_D));
  parts.W = parts.W.rounded(wp);
  parts.S1 = parts.S1.rounded(wp);
  parts.S2 = parts.S2.rounded(wp);
  parts.S3 = parts.S3.rounded(wp);
  auto cols = build_plong_columns<CPoly>(parts, a.d, [](const CPoly& p, int k) { return p.shifted(k); });

  int rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
  const int k = static_cast<int>(a.d) + 1;
  if (rows < k) return false;

  // [A | b]: columns p_0..p_{d-1}, then the monic right-hand side
  std::vector<std::vector<CIv>> ab(rows, std::vector<CIv>(k, CIv(Rat(0))));
  std::vector<std::vector<std::complex<double>>> mid(
      rows, std::vector<std::complex<double>>(k, 0.0));
  for (int j = 0; j < rows; ++j) {
    for (long i = 0; i < a.d; ++i) ab[j][i] = cols[i][j];
    ab[j][k - 1] = cols[a.d][j];
    for (int i = 0; i < k; ++i)
      mid[j][i] = std::complex<double>(rat_to_double(ab[j][i].re().mid()),
                                       rat_to_double(ab[j][i].im().mid()));
  }
  std::vector<int> picked = detail::select_rows(mid, k);
  if (static_cast<int>(picked.size()) < k) return false;
  std::vector<std::vector<CIv>> minor;
  for (int rr : picked) minor.push_back(ab[rr]);
  CIv det = detail::interval_det(minor);
  return det.excludes_zero();
}

// ---------------------------------------------------------------------------
// exact route

struct ExactSystem {
  Tower tower;
  APoly T;   // theta = T / Q
  Poly Q;    // rational: product of the singular factors
  std::vector<APoly> columns;
};

inline ExactSystem build_exact_system(const RatFun& r, const SingularityProfile& prof,
                                      const Assignment& a, Tower tower) {
  // per-factor class data; adjoin roots for every class except each factor's
  // largest
  struct FactorPlan {
    Poly q_y;
    std::vector<ValueClass> classes;
    std::vector<int> adjoined_idx;  // index into tower.adjoined per adjoined root
    size_t largest = 0;
  };
  std::vector<FactorPlan> plans;
  for (size_t f = 0; f < prof.finite.size(); ++f) {
    FactorPlan plan;
    plan.q_y = prof.finite[f].factor.monic();
    plan.classes = value_classes(a.e_per_factor[f]);
    for (size_t c = 1; c < plan.classes.size(); ++c)
      if (plan.classes[c].roots.size() > plan.classes[plan.largest].roots.size())
        plan.largest = c;
    plans.push_back(std::move(plan));
  }

  for (auto& plan : plans) {
    if (plan.classes.size() <= 1) continue;
    Poly q_t('t', std::vector<Rat>(plan.q_y.coeffs()));
    CtxPtr qctx = FieldCtx::make(q_t);
    std::vector<int> same_q;
    for (size_t c = 0; c < plan.classes.size(); ++c) {
      if (c == plan.largest) continue;
      for (int root : plan.classes[c].roots) {
        int idx = tower_adjoin(tower, RootRef{q_t, qctx, root}, same_q);
        same_q.push_back(idx);
        plan.adjoined_idx.push_back(idx);
      }
    }
  }

  const CtxPtr ctx = tower.ctx;
  ExactSystem sys;
  sys.Q = Poly::constant(Rat(1), 'y');
  for (const auto& plan : plans) sys.Q *= plan.q_y;

  APoly T(ctx, 'y');
  for (const auto& plan : plans) {
    Poly others = Poly::constant(Rat(1), 'y');
    for (const auto& p2 : plans)
      if (&p2 != &plan) others *= p2.q_y;
    if (plan.classes.size() <= 1) {
      long v = plan.classes.empty() ? 0 : plan.classes[0].value;
      if (v != 0)
        T = T + APoly::lift(plan.q_y.derivative() * others, ctx, 'y').scaled(make_rat(v, 2));
      continue;
    }
    // class polynomials over the tower
    std::vector<APoly> gs(plan.classes.size());
    APoly prod_adjoined(ctx, 'y');
    prod_adjoined = APoly::lift(Poly::constant(Rat(1), 'y'), ctx, 'y');
    size_t k = 0;
    for (size_t c = 0; c < plan.classes.size(); ++c) {
      if (c == plan.largest) continue;
      APoly g = APoly::lift(Poly::constant(Rat(1), 'y'), ctx, 'y');
      for (size_t j = 0; j < plan.classes[c].roots.size(); ++j) {
        const AlgNum& root = tower.adjoined[plan.adjoined_idx[k++]];
        g = g * APoly::from_roots_linear(ctx, 'y', root.rep());
      }
      gs[c] = g;
      prod_adjoined = prod_adjoined * g;
    }
    gs[plan.largest] = apoly_div_exact(APoly::lift(plan.q_y, ctx, 'y'), prod_adjoined);
    for (size_t c = 0; c < plan.classes.size(); ++c) {
      if (plan.classes[c].value == 0) continue;
      APoly term = gs[c].derivative();
      for (size_t c2 = 0; c2 < plan.classes.size(); ++c2)
        if (c2 != c) term = term * gs[c2];
      term = term * APoly::lift(others, ctx, 'y');
      T = T + term.scaled(make_rat(plan.classes[c].value, 2));
    }
  }
  sys.T = T;
  sys.tower = std::move(tower);

  Poly Q3_over_D = poly_div_exact(sys.Q * sys.Q * sys.Q, r.den());
  auto lift = [&](const Poly& p) { return APoly::lift(p, ctx, 'y'); };
  auto parts = build_plong_parts<APoly>(T, lift(sys.Q), lift(r.num()), lift(r.den()),
                                        lift(Q3_over_D));
  sys.columns = build_plong_columns<APoly>(parts, a.d,
                                           [](const APoly& p, int k2) { return apoly_shifted(p, k2); });
  return sys;
}

struct PExistsResult {
  enum class Outcome { NoP, Found, Unsupported };
  Outcome outcome = Outcome::NoP;
  std::string method;  // "interval" or "exact"
  // found data (exact path only)
  CtxPtr ctx;
  std::vector<Poly> p_coeffs;  // reps of p_0..p_{d-1}; P is monic
  std::string p_string;
};

// Verify a found P by substituting it back into the identity.
inline bool verify_p(const ExactSystem& sys, const Assignment& a,
                     const std::vector<Poly>& p_coeffs) {
  const CtxPtr& ctx = sys.tower.ctx;
  std::vector<Poly> pc(a.d + 1, Poly('t'));
  for (long i = 0; i < a.d; ++i) pc[i] = p_coeffs[i];
  pc[a.d] = Poly::constant(Rat(1), 't');
  APoly acc(ctx, 'y');
  for (long i = 0; i <= a.d; ++i) {
    if (pc[i].is_zero()) continue;
    acc = acc + sys.columns[i].scaled(pc[i]);
  }
  return acc.is_zero();
}

inline std::string render_p(const CtxPtr& ctx, const std::vector<Poly>& coeffs, long d) {
  std::ostringstream os;
  if (d == 0)
    os << "1";
  else if (d == 1)
    os << "y";
  else
    os << "y^" << d;
  for (long i = d - 1; i >= 0; --i) {
    const Poly& c = coeffs[i];
    if (c.is_zero()) continue;
    os << " + (" << c.to_string() << ")";
    if (i > 0) os << "*y";
    if (i > 1) os << "^" << i;
  }
  if (ctx->degree() > 1) os << "  [t: root of " << ctx->modulus().to_string() << "]";
  return os.str();
}

// Exact decision, handling D5 splits by continuing in the branch that holds
// the tracked boxes (the other branch describes conjugate assignments, which
// run their own searches).
inline PExistsResult p_exists_exact(const RatFun& r, const SingularityProfile& prof,
                                    const Assignment& a) {
  ExactSystem sys = build_exact_system(r, prof, a, Tower{});
  for (int round = 0; round < 64; ++round) {
    const CtxPtr ctx = sys.tower.ctx;
    int rows = 0;
    for (const auto& c : sys.columns) rows = std::max(rows, c.degree() + 1);
    std::vector<std::vector<AlgNum>> M(rows);
    std::vector<AlgNum> rhs;
    for (int j = 0; j < rows; ++j) {
      for (long i = 0; i < a.d; ++i)
        M[j].push_back(AlgNum(ctx, sys.columns[i][j], sys.tower.gen_box));
      rhs.push_back(AlgNum(ctx, -sys.columns[a.d][j], sys.tower.gen_box));
    }
    LinSolveOutcome out = linear_solve(M, rhs, ctx);
    if (out.status == SolveStatus::Inconsistent) {
      if (!verify_inconsistency_certificate(M, rhs, ctx, out.certificate_u))
        throw std::logic_error("p_exists: inconsistency certificate failed re-verification");
      PExistsResult res;
      res.outcome = PExistsResult::Outcome::NoP;
      res.method = "exact";
      return res;
    }
    if (out.status == SolveStatus::Solution) {
      std::vector<Poly> coeffs;
      for (const auto& x : out.solution) coeffs.push_back(x.rep());
      // a fully degenerate identity (every column zero) constrains nothing;
      // any monic P works, so complete with zero coefficients
      while (static_cast<long>(coeffs.size()) < a.d) coeffs.emplace_back('t');
      if (!verify_p(sys, a, coeffs))
        throw std::logic_error("p_exists: candidate P failed re-verification");
      PExistsResult res;
      res.outcome = PExistsResult::Outcome::Found;
      res.method = "exact";
      res.ctx = ctx;
      res.p_coeffs = coeffs;
      res.p_string = render_p(ctx, coeffs, a.d);
      return res;
    }
    // split from the solver: map the system into the branch holding the
    // tracked box and re-solve there
    CtxPtr b1 = branch_ctx(ctx, out.split_m1);
    const CIv& my_box = ctx->box(sys.tower.gen_box);
    bool in_b1 = false;
    for (size_t i = 0; i < b1->num_roots(); ++i)
      if (!b1->box(static_cast<int>(i)).disjoint(my_box)) in_b1 = true;
    CtxPtr next = in_b1 ? b1 : branch_ctx(ctx, out.split_m2);
    int nb = -1;
    for (size_t i = 0; i < next->num_roots(); ++i)
      if (!next->box(static_cast<int>(i)).disjoint(my_box)) nb = static_cast<int>(i);
    if (nb < 0) {
      PExistsResult res;
      res.outcome = PExistsResult::Outcome::Unsupported;
      res.method = "exact";
      return res;
    }
    Tower branched;
    branched.ctx = next;
    branched.gen_box = nb;
    for (const AlgNum& x : sys.tower.adjoined)
      branched.adjoined.emplace_back(next, poly_mod(x.rep(), next->modulus()), nb);
    std::vector<APoly> mapped_cols;
    for (const APoly& col : sys.columns) {
      std::vector<Poly> cc;
      for (const Poly& c : col.coeffs()) cc.push_back(poly_mod(c, next->modulus()));
      mapped_cols.emplace_back(next, 'y', std::move(cc));
    }
    sys.columns = std::move(mapped_cols);
    std::vector<Poly> tc;
    for (const Poly& c : sys.T.coeffs()) tc.push_back(poly_mod(c, next->modulus()));
    sys.T = APoly(next, 'y', std::move(tc));
    sys.tower = std::move(branched);
  }
  PExistsResult res;
  res.outcome = PExistsResult::Outcome::Unsupported;
  res.method = "exact";
  return res;
}

struct PExistsOptions {
  bool interval_prefilter = true;
  std::vector<long> prefilter_precisions = {96, 256, 640};
};

inline PExistsResult p_exists(const RatFun& r, const SingularityProfile& prof,
                              const Assignment& a, const PExistsOptions& opts = {}) {
  if (opts.interval_prefilter && assignment_needs_algebra(prof, a)) {
    std::vector<FactorBoxes> boxes = profile_boxes(prof);
    for (long prec : opts.prefilter_precisions) {
      if (interval_rules_out(r, a, boxes, prec)) {
        PExistsResult res;
        res.outcome = PExistsResult::Outcome::NoP;
        res.method = "interval";
        return res;
      }
    }
  }
  return p_exists_exact(r, prof, a);
}

}  // namespace gg
