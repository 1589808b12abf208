#pragma once

// Polynomials with quotient-ring coefficients, and incremental root
// adjunction: given certified root boxes of a square-free rational
// polynomial, build a single primitive-element context containing chosen
// roots.  Candidate primitive elements u = beta + k*alpha are flattened with
// a resultant; the first k whose modulus is square-free wins.  Everything
// stays factorization-free; zero divisors raise SplitSignal and the branch
// holding the tracked boxes continues.

#include <geogal/numfield.hpp>

namespace gg {

// polynomial in one variable with coefficients in Q[t]/(m)
class APoly {
 public:
  APoly() = default;
  APoly(CtxPtr ctx, char var) : ctx_(std::move(ctx)), var_(var) {}
  APoly(CtxPtr ctx, char var, std::vector<Poly> coeffs)
      : ctx_(std::move(ctx)), var_(var), c_(std::move(coeffs)) {
    for (auto& x : c_) x = poly_mod(x, ctx_->modulus());
    trim();
  }

  static APoly lift(const Poly& p, const CtxPtr& ctx, char var) {
    std::vector<Poly> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(Poly::constant(p[i], 't'));
    return APoly(ctx, var, std::move(c));
  }

  static APoly from_roots_linear(const CtxPtr& ctx, char var, const Poly& root_rep) {
    // y - root
    return APoly(ctx, var, {-root_rep, Poly::constant(Rat(1), 't')});
  }

  const CtxPtr& ctx() const { return ctx_; }
  char var() const { return var_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Poly& operator[](int i) const {
    static const Poly zero('t');
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
  }
  const std::vector<Poly>& coeffs() const { return c_; }
  Poly lc() const { return c_.empty() ? Poly('t') : c_.back(); }

  friend APoly operator+(const APoly& a, const APoly& b) {
    std::vector<Poly> r(std::max(a.c_.size(), b.c_.size()), Poly('t'));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return APoly(a.pick_ctx(b), a.pick_var(b), std::move(r));
  }
  friend APoly operator-(const APoly& a, const APoly& b) {
    std::vector<Poly> r(std::max(a.c_.size(), b.c_.size()), Poly('t'));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return APoly(a.pick_ctx(b), a.pick_var(b), std::move(r));
  }
  APoly operator-() const {
    APoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend APoly operator*(const APoly& a, const APoly& b) {
    if (a.is_zero() || b.is_zero()) return APoly(a.pick_ctx(b), a.pick_var(b));
    const Poly& m = a.pick_ctx(b)->modulus();
    std::vector<Poly> r(a.c_.size() + b.c_.size() - 1, Poly('t'));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    for (auto& x : r) x = poly_mod(x, m);
    return APoly(a.pick_ctx(b), a.pick_var(b), std::move(r));
  }
  APoly scaled(const Poly& s) const {
    APoly r = *this;
    for (auto& x : r.c_) x = poly_mod(x * s, ctx_->modulus());
    r.trim();
    return r;
  }
  APoly scaled(const Rat& s) const {
    APoly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  APoly derivative() const {
    if (c_.size() <= 1) return APoly(ctx_, var_);
    std::vector<Poly> r(c_.size() - 1, Poly('t'));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return APoly(ctx_, var_, std::move(r));
  }

  // Horner evaluation at a ring element.
  Poly eval_rep(const Poly& x) const {
    const Poly& m = ctx_->modulus();
    Poly acc('t');
    for (int i = degree(); i >= 0; --i) acc = poly_mod(acc * x + c_[i], m);
    return acc;
  }

  bool operator==(const APoly& o) const { return c_ == o.c_; }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

 private:
  CtxPtr pick_ctx(const APoly& b) const { return ctx_ ? ctx_ : b.ctx_; }
  char pick_var(const APoly& b) const { return ctx_ ? var_ : b.var_; }

  CtxPtr ctx_;
  char var_ = 'y';
  std::vector<Poly> c_;
};

// divmod with an invertible leading coefficient; raises SplitSignal through
// ctx_inverse when the leading coefficient is a zero divisor.
inline std::pair<APoly, APoly> apoly_divmod(const APoly& a, const APoly& b) {
  if (b.is_zero()) throw std::domain_error("apoly_divmod: zero divisor polynomial");
  const Poly& m = a.ctx() ? a.ctx()->modulus() : b.ctx()->modulus();
  CtxPtr ctx = a.ctx() ? a.ctx() : b.ctx();
  Poly lb_inv = ctx_inverse(b.lc(), m);
  if (a.degree() < b.degree()) return {APoly(ctx, b.var()), a};
  std::vector<Poly> rem(a.coeffs());
  std::vector<Poly> quo(a.degree() - b.degree() + 1, Poly('t'));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Poly q = poly_mod(rem[k + b.degree()] * lb_inv, m);
    quo[k] = q;
    if (!q.is_zero())
      for (int j = 0; j <= b.degree(); ++j) rem[k + j] = poly_mod(rem[k + j] - q * b[j], m);
  }
  return {APoly(ctx, b.var(), std::move(quo)), APoly(ctx, b.var(), std::move(rem))};
}

inline APoly apoly_div_exact(const APoly& a, const APoly& b) {
  auto [q, r] = apoly_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("apoly_div_exact: nonzero remainder");
  return q;
}

// monic gcd by the Euclidean algorithm with D5 inversions
inline APoly apoly_gcd(APoly a, APoly b) {
  const CtxPtr ctx = a.ctx() ? a.ctx() : b.ctx();
  const Poly& m = ctx->modulus();
  while (!b.is_zero()) {
    auto [q, r] = apoly_divmod(a, b);
    (void)q;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scaled(ctx_inverse(a.lc(), m));
}

// ---------------------------------------------------------------------------
// resultant of two z-polynomials with Q[u] coefficients (subresultant PRS)

namespace detail {

struct ZPoly {
  std::vector<Poly> c;  // coefficients in Q[u], ascending in z

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Poly& lc() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

inline ZPoly zp_scale(const ZPoly& a, const Poly& s) {
  ZPoly r = a;
  for (auto& x : r.c) x *= s;
  r.trim();
  return r;
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), Poly('u'));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

inline ZPoly zp_shift_scale(const ZPoly& b, const Poly& s, int k) {
  // s * z^k * b
  ZPoly r;
  r.c.assign(b.c.size() + k, Poly('u'));
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i + k] = b.c[i] * s;
  r.trim();
  return r;
}

inline ZPoly zp_div_exact(const ZPoly& a, const Poly& d) {
  ZPoly r = a;
  for (auto& x : r.c) x = poly_div_exact(x, d);
  return r;
}

inline ZPoly zp_prem(ZPoly a, const ZPoly& b) {
  const int db = b.degree();
  int e = a.degree() - db + 1;
  const Poly d = b.lc();
  while (!a.is_zero() && a.degree() >= db) {
    ZPoly shifted = zp_shift_scale(b, a.lc(), a.degree() - db);
    a = zp_sub(zp_scale(a, d), shifted);
    --e;
  }
  if (e > 0) {
    Poly f = Poly::constant(Rat(1), 'u');
    for (int i = 0; i < e; ++i) f *= d;
    a = zp_scale(a, f);
  }
  return a;
}

inline Poly poly_pow_int(const Poly& p, int k) {
  Poly r = Poly::constant(Rat(1), p.var());
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

// res_z(A, B) in Q[u]; subresultant PRS without content stripping
inline Poly zp_resultant(ZPoly a, ZPoly b) {
  if (a.is_zero() || b.is_zero()) return Poly('u');
  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    Poly r = poly_pow_int(b.lc(), a.degree());
    return sign > 0 ? r : -r;
  }
  Poly g = Poly::constant(Rat(1), 'u');
  Poly h = Poly::constant(Rat(1), 'u');
  while (true) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    ZPoly r = zp_prem(a, b);
    a = b;
    Poly div = g * poly_pow_int(h, delta);
    b = zp_div_exact(r, div);
    g = a.lc();
    if (delta == 0) {
      // h unchanged: h^{1-0} g^0
    } else if (delta == 1) {
      h = g;
    } else {
      // h = g^delta / h^{delta-1}
      h = poly_div_exact(poly_pow_int(g, delta), poly_pow_int(h, delta - 1));
    }
    if (b.is_zero()) return Poly('u');
    if (b.degree() == 0) break;
  }
  Poly res;
  int dA = a.degree();
  if (dA == 1) {
    res = b.lc();
  } else {
    res = poly_div_exact(poly_pow_int(b.lc(), dA), poly_pow_int(h, dA - 1));
  }
  return sign > 0 ? res : -res;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// incremental root adjunction

// A root of a square-free rational polynomial, tracked by its isolating box.
struct RootRef {
  Poly q;       // square-free polynomial the root satisfies
  CtxPtr qctx;  // context whose boxes isolate q's roots
  int box = 0;  // which root
};

// Field state: a context plus the representatives of every adjoined root.
struct Tower {
  CtxPtr ctx = FieldCtx::rationals();
  int gen_box = 0;                // tracked embedding of the generator
  std::vector<AlgNum> adjoined;   // images of adjoined roots over ctx
};

namespace detail {

// find the unique ctx box intersecting an enclosure, refining the enclosure
// supplier until unique.
template <typename RefineFn>
int locate_box(const CtxPtr& ctx, RefineFn refine) {
  for (long prec = 16; prec <= (1L << 14); prec *= 2) {
    CIv enc = refine(prec);
    int hit = -1;
    int hits = 0;
    for (size_t i = 0; i < ctx->num_roots(); ++i) {
      if (!ctx->box(static_cast<int>(i)).disjoint(enc)) {
        hit = static_cast<int>(i);
        ++hits;
      }
    }
    if (hits == 1) return hit;
  }
  throw std::runtime_error("locate_box: enclosure does not separate");
}

}  // namespace detail

// Adjoin the root described by `ref` to the tower.  Returns the index of the
// new root in tw.adjoined; previously adjoined roots are remapped in place
// when the field extends.  `same_q` lists the indices of already-adjoined
// roots of the same polynomial ref.q.
inline int tower_adjoin(Tower& tw, const RootRef& ref, const std::vector<int>& same_q = {}) {
  // remaining factor of q over the current ctx
  APoly h = APoly::lift(ref.q.monic(), tw.ctx, 'y');
  for (int idx : same_q)
    h = apoly_div_exact(h, APoly::from_roots_linear(tw.ctx, 'y', tw.adjoined[idx].rep()));

  if (h.degree() == 1) {
    // remaining root already lives in the current field
    tw.adjoined.emplace_back(tw.ctx, -h[0], tw.gen_box);
    return static_cast<int>(tw.adjoined.size()) - 1;
  }

  if (tw.ctx->degree() == 1) {
    // base case: first extension; modulus is h itself (rational coefficients)
    std::vector<Rat> mc;
    for (int i = 0; i <= h.degree(); ++i) mc.push_back(h[i].constant_term());
    Poly m('t', std::move(mc));
    CtxPtr nctx = FieldCtx::make(m);
    int nbox = detail::locate_box(nctx, [&](long prec) {
      return ref.qctx->refine_box(ref.box, make_rat(Int(1), Int(1) << prec));
    });
    Tower ntw;
    ntw.ctx = nctx;
    ntw.gen_box = nbox;
    for (const AlgNum& r : tw.adjoined)
      ntw.adjoined.emplace_back(nctx, r.rep(), nbox);  // rational reps carry over
    ntw.adjoined.push_back(AlgNum::generator(nctx, nbox));
    tw = std::move(ntw);
    return static_cast<int>(tw.adjoined.size()) - 1;
  }

  const Poly& m = tw.ctx->modulus();
  for (long k = 1; k <= 40; ++k) {
    // flattening modulus M(u) = Res_z( m(z), h~(u - k z; z) )
    detail::ZPoly A;
    for (int i = 0; i <= m.degree(); ++i) A.c.push_back(Poly::constant(m[i], 'u'));
    A.trim();

    // B(z) = sum_j h_j(z) * (u - k z)^j, coefficients in Q[u]
    // represent as z-poly with Q[u] coefficients
    detail::ZPoly B;
    {
      // (u - k z)^j expanded: sum_i C(j,i) u^{j-i} (-k)^i z^i
      int dh = h.degree();
      std::vector<std::vector<Poly>> upow(dh + 1);  // upow[j][i] = coeff of z^i
      for (int j = 0; j <= dh; ++j) {
        upow[j].assign(j + 1, Poly('u'));
        Rat binom(1);
        for (int i = 0; i <= j; ++i) {
          Rat coeff = binom * rat_pow(Rat(-k), i);
          upow[j][i] = Poly::monomial(coeff, j - i, 'u');
          binom = binom * Rat(j - i) / Rat(i + 1);
        }
      }
      int max_z = 0;
      for (int j = 0; j <= dh; ++j) max_z = std::max(max_z, h[j].degree() + j);
      B.c.assign(max_z + 1, Poly('u'));
      for (int j = 0; j <= dh; ++j) {
        const Poly& hj = h[j];  // in t; reinterpret t -> z
        for (int a_i = 0; a_i <= hj.degree(); ++a_i) {
          if (hj[a_i] == 0) continue;
          for (int i = 0; i <= j; ++i) {
            // z^{a_i} from h_j, z^i from (u-kz)^j
            B.c[a_i + i] += upow[j][i] * hj[a_i];
          }
        }
      }
      B.trim();
    }

    Poly M_u = detail::zp_resultant(A, B);
    if (M_u.degree() != m.degree() * h.degree()) continue;
    Poly M('t', std::vector<Rat>(M_u.coeffs()));
    M = M.monic();
    if (poly_gcd(M, M.derivative()).degree() != 0) continue;

    CtxPtr nctx = FieldCtx::make(M);
    // our embedding: u = beta + k * alpha
    int nbox = detail::locate_box(nctx, [&](long prec) {
      Rat eps = make_rat(Int(1), Int(1) << prec);
      CIv alpha = tw.ctx->refine_box(tw.gen_box, eps);
      CIv beta = ref.qctx->refine_box(ref.box, eps);
      return beta + alpha * Rat(k);
    });

    // representative of alpha over the new ctx: unique common root of
    // m(z) and B(z)|_{u -> t}
    CtxPtr cur = nctx;
    int cur_box = nbox;
    bool retry_k = false;
    Poly alpha_rep('t');
    while (true) {
      APoly mz = APoly::lift(m, cur, 'z');
      std::vector<Poly> bc;
      for (const Poly& cu : B.c) bc.push_back(Poly('t', std::vector<Rat>(cu.coeffs())));
      APoly bz(cur, 'z', std::move(bc));
      try {
        APoly g = apoly_gcd(mz, bz);
        if (g.degree() != 1) {
          retry_k = true;
          break;
        }
        alpha_rep = -g[0];
        break;
      } catch (const SplitSignal& s) {
        // continue in the branch containing our box
        CtxPtr b1 = branch_ctx(cur, s.m1);
        const CIv& my_box = cur->box(cur_box);
        bool in_b1 = false;
        for (size_t i = 0; i < b1->num_roots(); ++i)
          if (!b1->box(static_cast<int>(i)).disjoint(my_box)) in_b1 = true;
        CtxPtr next = in_b1 ? b1 : branch_ctx(cur, s.m2);
        int nb = -1;
        for (size_t i = 0; i < next->num_roots(); ++i)
          if (!next->box(static_cast<int>(i)).disjoint(my_box)) nb = static_cast<int>(i);
        if (nb < 0) throw std::runtime_error("tower_adjoin: lost tracked box in split");
        cur = next;
        cur_box = nb;
      }
    }
    if (retry_k) continue;

    // beta = u - k * alpha
    Poly beta_rep = poly_mod(Poly::identity('t') - alpha_rep * Rat(k), cur->modulus());

    // verification: m(alpha) = 0 and h~(beta; alpha) = 0 in the new ring
    {
      APoly mz = APoly::lift(m, cur, 't');
      if (!mz.eval_rep(alpha_rep).is_zero())
        throw std::logic_error("tower_adjoin: alpha verification failed");
      const Poly& nm = cur->modulus();
      Poly acc('t');
      for (int j = h.degree(); j >= 0; --j) {
        Poly hj_at_alpha('t');
        for (int i = h[j].degree(); i >= 0; --i)
          hj_at_alpha = poly_mod(hj_at_alpha * alpha_rep + Poly::constant(h[j][i], 't'), nm);
        acc = poly_mod(acc * beta_rep + hj_at_alpha, nm);
      }
      if (!acc.is_zero()) throw std::logic_error("tower_adjoin: beta verification failed");
    }

    // remap previously adjoined roots: t_old -> alpha_rep
    Tower ntw;
    ntw.ctx = cur;
    ntw.gen_box = cur_box;
    for (const AlgNum& r : tw.adjoined) {
      Poly img('t');
      const Poly& nm = cur->modulus();
      for (int i = r.rep().degree(); i >= 0; --i)
        img = poly_mod(img * alpha_rep + Poly::constant(r.rep()[i], 't'), nm);
      ntw.adjoined.emplace_back(cur, img, cur_box);
    }
    ntw.adjoined.emplace_back(cur, beta_rep, cur_box);
    tw = std::move(ntw);
    return static_cast<int>(tw.adjoined.size()) - 1;
  }
  throw std::runtime_error("tower_adjoin: no square-free primitive element found");
}

}  // namespace gg
