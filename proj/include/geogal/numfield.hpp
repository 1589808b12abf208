#pragma once

// Exact arithmetic with algebraic numbers: quotient-ring dynamic evaluation
// (D5) over a possibly reducible square-free modulus, plus certified complex
// isolating boxes that pin down which embedding each value tracks.  Moduli are
// never factored; inversion splits the modulus lazily when it meets a zero
// divisor.

#include <geogal/rootiso.hpp>

#include <memory>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace gg {

// Raised when a quotient-ring inversion meets a zero divisor: the modulus
// factors as m1*m2 and the computation must continue per branch.
struct SplitSignal {
  Poly m1, m2;
};

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("inversion of the zero class") {}
};

class FieldCtx;
using CtxPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  // The rational base ring, modelled as Q[t]/(t).
  static CtxPtr rationals() {
    auto ctx = std::make_shared<FieldCtx>(Private{});
    ctx->modulus_ = Poly::identity('t');
    ctx->boxes_ = {CIv(Rat(0), Rat(0))};
    return ctx;
  }

  static CtxPtr make(const Poly& squarefree_modulus) {
    Poly m = squarefree_modulus.monic();
    if (poly_gcd(m, m.derivative()).degree() != 0)
      throw std::invalid_argument("FieldCtx: modulus must be square-free");
    auto ctx = std::make_shared<FieldCtx>(Private{});
    ctx->modulus_ = m;
    ctx->boxes_ = isolate_roots(m);
    return ctx;
  }

  static CtxPtr make_with_boxes(const Poly& m, std::vector<CIv> boxes) {
    auto ctx = std::make_shared<FieldCtx>(Private{});
    ctx->modulus_ = m;
    ctx->boxes_ = std::move(boxes);
    return ctx;
  }

  const Poly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  size_t num_roots() const { return boxes_.size(); }
  const CIv& box(int i) const { return boxes_[i]; }

  // Pure refinement: returns an enclosure of root i of width < eps without
  // touching shared state.  Newton contraction with the root-distance disk
  // bound; each accepted step is nested in the previous box, so the tracked
  // root never changes.
  CIv refine_box(int i, const Rat& eps) const {
    return refine_root_box(modulus_, modulus_.derivative(), boxes_[i], eps);
  }

  struct Private {};
  explicit FieldCtx(Private) {}

 private:
  Poly modulus_;
  std::vector<CIv> boxes_;
};

inline bool same_ctx(const CtxPtr& a, const CtxPtr& b) {
  return a == b || a->modulus() == b->modulus();
}

// Inverse of rep modulo m; throws SplitSignal on a zero divisor and
// DivisionByZero on the zero class.
inline Poly ctx_inverse(const Poly& rep, const Poly& m) {
  Poly r = poly_mod(rep, m);
  if (r.is_zero()) throw DivisionByZero();
  auto x = poly_xgcd(r, m);
  if (x.g.degree() == 0) return poly_mod(x.u, m);
  throw SplitSignal{x.g, poly_div_exact(m, x.g)};
}

class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(CtxPtr ctx, Poly rep, int box_idx)
      : ctx_(std::move(ctx)), rep_(poly_mod(std::move(rep), ctx_->modulus())), box_(box_idx) {}

  static AlgNum from_rat(const CtxPtr& ctx, const Rat& a, int box_idx = 0) {
    return AlgNum(ctx, Poly::constant(a, 't'), box_idx);
  }
  static AlgNum generator(const CtxPtr& ctx, int box_idx) {
    return AlgNum(ctx, Poly::identity('t'), box_idx);
  }

  const CtxPtr& ctx() const { return ctx_; }
  const Poly& rep() const { return rep_; }
  int box_index() const { return box_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rat rational_value() const { return rep_.constant_term(); }

  // ring equality of representatives (embedding-blind)
  friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  friend AlgNum operator+(const AlgNum& a, const AlgNum& b) {
    a.check(b);
    return AlgNum(a.ctx_, a.rep_ + b.rep_, a.box_);
  }
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b) {
    a.check(b);
    return AlgNum(a.ctx_, a.rep_ - b.rep_, a.box_);
  }
  AlgNum operator-() const { return AlgNum(ctx_, -rep_, box_); }
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b) {
    a.check(b);
    return AlgNum(a.ctx_, poly_mod(a.rep_ * b.rep_, a.ctx_->modulus()), a.box_);
  }
  friend AlgNum operator*(const AlgNum& a, const Rat& s) { return AlgNum(a.ctx_, a.rep_ * s, a.box_); }
  friend AlgNum operator*(const Rat& s, const AlgNum& a) { return a * s; }

  AlgNum inverse() const { return AlgNum(ctx_, ctx_inverse(rep_, ctx_->modulus()), box_); }
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }

  // rigorous enclosure of the tracked embedding
  CIv embed(long prec) const {
    Rat eps = make_rat(Int(1), Int(1) << prec);
    CIv t = ctx_->refine_box(box_, eps);
    CIv acc(Rat(0));
    for (int i = rep_.degree(); i >= 0; --i)
      acc = (acc * t + CIv(rep_[i])).round_out(prec + 16);
    return acc;
  }

 private:
  void check(const AlgNum& o) const {
    if (!same_ctx(ctx_, o.ctx_)) throw std::logic_error("AlgNum: mixed contexts");
  }

  CtxPtr ctx_;
  Poly rep_{'t'};
  int box_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Inv };

using AlgOrSplit = std::variant<AlgNum, SplitSignal>;

inline AlgOrSplit alg_arith(ArithOp op, const AlgNum& a, const AlgNum& b) {
  try {
    switch (op) {
      case ArithOp::Add: return a + b;
      case ArithOp::Sub: return a - b;
      case ArithOp::Mul: return a * b;
      case ArithOp::Inv: return a.inverse();
    }
  } catch (SplitSignal& s) {
    return s;
  }
  throw std::logic_error("unreachable");
}

// (ctx, one AlgNum per complex root of p)
struct RootsOf {
  CtxPtr ctx;
  std::vector<AlgNum> roots;
};

inline RootsOf roots_of(const Poly& p) {
  CtxPtr ctx = FieldCtx::make(p);
  RootsOf out;
  out.ctx = ctx;
  for (size_t i = 0; i < ctx->num_roots(); ++i)
    out.roots.push_back(AlgNum::generator(ctx, static_cast<int>(i)));
  return out;
}

// ---------------------------------------------------------------------------
// traces: sum of a rational-coefficient formula over all roots of q, via
// Newton power sums -- no root isolation involved.

inline std::vector<Rat> newton_power_sums(const Poly& q_in, int upto) {
  Poly q = q_in.monic();
  int n = q.degree();
  std::vector<Rat> p(upto + 1, Rat(0));
  p[0] = Rat(n);
  for (int k = 1; k <= upto; ++k) {
    // p_k + sum_{i=1}^{k-1} a_{n-i} p_{k-i} + k a_{n-k} = 0   (k <= n)
    Rat acc(0);
    for (int i = 1; i < k; ++i) {
      if (n - i < 0) break;
      acc += q[n - i] * p[k - i];
    }
    if (k <= n)
      p[k] = -acc - Rat(k) * q[n - k];
    else {
      Rat acc2(0);
      for (int i = 1; i <= n; ++i) acc2 += q[n - i] * p[k - i];
      p[k] = -acc2;
    }
  }
  return p;
}

inline Rat sum_over_roots(const Poly& formula, const Poly& q) {
  if (q.degree() < 1) return Rat(0);
  auto p = newton_power_sums(q, std::max(formula.degree(), 0));
  Rat acc(0);
  for (int k = 0; k <= formula.degree(); ++k) acc += formula[k] * p[k];
  return acc;
}

// ---------------------------------------------------------------------------
// exact linear algebra over the quotient ring with D5 splitting

enum class SolveStatus { Solution, Inconsistent, Split };

struct LinSolveOutcome {
  SolveStatus status = SolveStatus::Solution;
  std::vector<AlgNum> solution;
  // Inconsistent: left null vector u with u^T M = 0 and u^T v invertible
  std::vector<Poly> certificate_u;
  // Split: descendant moduli to re-run
  Poly split_m1, split_m2;
};

// M is row-major (rows x cols), v has rows entries; all entries share ctx.
inline LinSolveOutcome linear_solve(const std::vector<std::vector<AlgNum>>& M,
                                    const std::vector<AlgNum>& v, const CtxPtr& ctx) {
  const size_t rows = M.size();
  const size_t cols = rows ? M[0].size() : 0;
  const Poly& mod = ctx->modulus();

  std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols, Poly('t')));
  std::vector<Poly> b(rows, Poly('t'));
  std::vector<std::vector<Poly>> u(rows, std::vector<Poly>(rows, Poly('t')));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) a[i][j] = M[i][j].rep();
    b[i] = v[i].rep();
    u[i][i] = Poly::constant(Rat(1), 't');
  }

  auto mulmod = [&](const Poly& x, const Poly& y) { return poly_mod(x * y, mod); };

  std::vector<int> pivot_row_of_col(cols, -1);
  size_t rank = 0;
  try {
    for (size_t col = 0; col < cols && rank < rows; ++col) {
      // choose an invertible pivot; prefer nonzero constants
      int chosen = -1;
      Poly inv('t');
      for (int pass = 0; pass < 2 && chosen < 0; ++pass) {
        for (size_t r = rank; r < rows; ++r) {
          const Poly& e = a[r][col];
          if (e.is_zero()) continue;
          if (pass == 0 && e.degree() != 0) continue;
          inv = ctx_inverse(e, mod);  // may raise SplitSignal
          chosen = static_cast<int>(r);
          break;
        }
      }
      if (chosen < 0) continue;  // free column
      std::swap(a[rank], a[chosen]);
      std::swap(b[rank], b[chosen]);
      std::swap(u[rank], u[chosen]);
      // scale pivot row
      for (size_t j = 0; j < cols; ++j) a[rank][j] = mulmod(a[rank][j], inv);
      b[rank] = mulmod(b[rank], inv);
      for (size_t j = 0; j < rows; ++j) u[rank][j] = mulmod(u[rank][j], inv);
      for (size_t r = 0; r < rows; ++r) {
        if (r == rank || a[r][col].is_zero()) continue;
        Poly f = a[r][col];
        for (size_t j = 0; j < cols; ++j) a[r][j] = poly_mod(a[r][j] - f * a[rank][j], mod);
        b[r] = poly_mod(b[r] - f * b[rank], mod);
        for (size_t j = 0; j < rows; ++j) u[r][j] = poly_mod(u[r][j] - f * u[rank][j], mod);
      }
      pivot_row_of_col[col] = static_cast<int>(rank);
      ++rank;
    }

    // consistency of the eliminated tail
    for (size_t r = rank; r < rows; ++r) {
      if (b[r].is_zero()) continue;
      // residual rhs must be decided: invertible => inconsistent everywhere
      Poly g = poly_gcd(b[r], mod);
      if (g.degree() == 0) {
        LinSolveOutcome out;
        out.status = SolveStatus::Inconsistent;
        out.certificate_u = u[r];
        return out;
      }
      // zero divisor: branch
      throw SplitSignal{g, poly_div_exact(mod, g)};
    }
  } catch (const SplitSignal& s) {
    LinSolveOutcome out;
    out.status = SolveStatus::Split;
    out.split_m1 = s.m1;
    out.split_m2 = s.m2;
    return out;
  }

  LinSolveOutcome out;
  out.status = SolveStatus::Solution;
  out.solution.assign(cols, AlgNum::from_rat(ctx, Rat(0)));
  for (size_t col = 0; col < cols; ++col)
    if (pivot_row_of_col[col] >= 0)
      out.solution[col] = AlgNum(ctx, b[pivot_row_of_col[col]], 0);
  return out;
}

// Re-verify an Inconsistent certificate by substitution.
inline bool verify_inconsistency_certificate(const std::vector<std::vector<AlgNum>>& M,
                                             const std::vector<AlgNum>& v, const CtxPtr& ctx,
                                             const std::vector<Poly>& u) {
  const Poly& mod = ctx->modulus();
  const size_t rows = M.size();
  const size_t cols = rows ? M[0].size() : 0;
  for (size_t j = 0; j < cols; ++j) {
    Poly acc('t');
    for (size_t i = 0; i < rows; ++i) acc = poly_mod(acc + u[i] * M[i][j].rep(), mod);
    if (!acc.is_zero()) return false;
  }
  Poly rhs('t');
  for (size_t i = 0; i < rows; ++i) rhs = poly_mod(rhs + u[i] * v[i].rep(), mod);
  return poly_gcd(rhs, mod).degree() == 0;  // invertible residual
}

// Restrict a context to one branch modulus: keeps exactly the boxes whose
// roots satisfy mi, refining until each box is decided.
inline CtxPtr branch_ctx(const CtxPtr& ctx, const Poly& mi) {
  Poly mo = poly_div_exact(ctx->modulus(), mi);
  std::vector<CIv> keep;
  for (size_t i = 0; i < ctx->num_roots(); ++i) {
    CIv box = ctx->box(static_cast<int>(i));
    Rat eps = box.width() / 2;
    for (int round = 0; round < 200; ++round) {
      CIv vi = CIv(Rat(0));
      CIv vo = CIv(Rat(0));
      // Horner over the box
      auto horner = [&](const Poly& p) {
        CIv acc{RIv(Rat(0)), RIv(Rat(0))};
        for (int k = p.degree(); k >= 0; --k) acc = acc * box + CIv(p[k]);
        return acc;
      };
      vi = horner(mi);
      vo = horner(mo);
      if (vi.excludes_zero()) break;  // not a root of mi
      if (vo.excludes_zero()) {       // must be a root of mi
        keep.push_back(box);
        break;
      }
      eps = eps / 16;
      box = ctx->refine_box(static_cast<int>(i), eps);
    }
  }
  if (static_cast<int>(keep.size()) != mi.degree())
    throw std::runtime_error("branch_ctx: box partition does not match modulus degree");
  return FieldCtx::make_with_boxes(mi.monic(), std::move(keep));
}

// Map an element into a branch of its context.
inline AlgNum to_branch(const AlgNum& x, const CtxPtr& branch) {
  // locate the image of the tracked box among the branch boxes
  const CIv& old_box = x.ctx()->box(x.box_index());
  int idx = -1;
  for (size_t i = 0; i < branch->num_roots(); ++i) {
    const CIv& nb = branch->box(static_cast<int>(i));
    if (!nb.disjoint(old_box)) {
      idx = static_cast<int>(i);
      break;
    }
  }
  if (idx < 0) idx = 0;  // rational element: any embedding
  return AlgNum(branch, poly_mod(x.rep(), branch->modulus()), idx);
}

// Convenience: run linear_solve, resolving splits recursively; returns one
// outcome per leaf branch.
inline std::vector<std::pair<CtxPtr, LinSolveOutcome>> linear_solve_all_branches(
    const std::vector<std::vector<AlgNum>>& M, const std::vector<AlgNum>& v, const CtxPtr& ctx) {
  LinSolveOutcome out = linear_solve(M, v, ctx);
  if (out.status != SolveStatus::Split) return {{ctx, std::move(out)}};
  std::vector<std::pair<CtxPtr, LinSolveOutcome>> res;
  for (const Poly& mi : {out.split_m1, out.split_m2}) {
    CtxPtr sub = branch_ctx(ctx, mi);
    std::vector<std::vector<AlgNum>> Mb(M.size());
    std::vector<AlgNum> vb;
    for (size_t i = 0; i < M.size(); ++i) {
      for (const AlgNum& e : M[i]) Mb[i].push_back(to_branch(e, sub));
      vb.push_back(to_branch(v[i], sub));
    }
    auto leaf = linear_solve_all_branches(Mb, vb, sub);
    res.insert(res.end(), leaf.begin(), leaf.end());
  }
  return res;
}

}  // namespace gg
