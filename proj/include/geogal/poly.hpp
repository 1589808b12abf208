#pragma once

// Dense univariate polynomials over Rat. Subresultant PRS drives gcd and
// resultant so intermediate coefficients stay controlled; square-free
// factorization is Yun's algorithm. No factorization into irreducibles
// anywhere.

#include <geogal/rat.hpp>

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace gg {

class Poly {
 public:
  Poly() : var_('y') {}
  explicit Poly(char var) : var_(var) {}
  Poly(char var, std::vector<Rat> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rat& a, char var = 'y') {
    Poly p(var);
    if (a != 0) p.c_ = {a};
    return p;
  }
  static Poly identity(char var = 'y') { return Poly(var, {Rat(0), Rat(1)}); }
  static Poly monomial(const Rat& a, int k, char var = 'y') {
    Poly p(var);
    if (a != 0) {
      p.c_.assign(k + 1, Rat(0));
      p.c_[k] = a;
    }
    return p;
  }

  char var() const { return var_; }
  // Degree of the zero polynomial is the sentinel -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const Rat& operator[](int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat constant_term() const { return c_.empty() ? Rat(0) : c_[0]; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(a.var_combine(b), std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Poly(a.var_combine(b), std::move(r));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.var_combine(b));
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(a.var_combine(b), std::move(r));
  }
  friend Poly operator*(const Poly& a, const Rat& s) {
    if (s == 0) return Poly(a.var_);
    Poly r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(var_);
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(var_, std::move(r));
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  double eval_double(double x) const {
    double acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + rat_to_double(c_[i]);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
  }

  // p(s*y)
  Poly scale_arg(const Rat& s) const {
    Poly r = *this;
    Rat pw(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
      r.c_[i] *= pw;
      pw *= s;
    }
    r.trim();
    return r;
  }

  std::string to_string() const;

 private:
  char var_combine(const Poly& b) const {
    assert(is_constant() || b.is_constant() || var_ == b.var_);
    return is_constant() ? b.var_ : var_;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  char var_;
  std::vector<Rat> c_;
};

inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  assert(!b.is_zero());
  if (a.degree() < b.degree()) return {Poly(b.var()), a};
  std::vector<Rat> rem(a.coeffs());
  std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
  const Rat lb = b.lc();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat q = rem[k + b.degree()] / lb;
    quo[k] = q;
    if (q != 0)
      for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b[j];
  }
  return {Poly(b.var(), std::move(quo)), Poly(b.var(), std::move(rem))};
}

inline Poly poly_div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  assert(r.is_zero());
  (void)r;
  return q;
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

inline Poly poly_pow(const Poly& p, unsigned k) {
  Poly r = Poly::constant(Rat(1), p.var());
  Poly base = p;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

// content as a rational: gcd of numerators over lcm of denominators, carrying
// the sign of the leading coefficient.
inline Rat poly_rat_content(const Poly& p) {
  if (p.is_zero()) return Rat(0);
  Int g(0), l(1);
  for (const Rat& x : p.coeffs()) {
    if (x == 0) continue;
    Int num = x.get_num(), den = x.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Rat c = make_rat(g, l);
  if (p.lc() < 0) c = -c;
  return c;
}

// Integer-coefficient primitive part (p divided by its rational content).
inline Poly poly_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Rat c = poly_rat_content(p);
  return p * (Rat(1) / c);
}

namespace detail {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
inline Poly prem(Poly a, const Poly& b) {
  const int db = b.degree();
  int e = a.degree() - db + 1;
  const Rat d = b.lc();
  while (!a.is_zero() && a.degree() >= db) {
    Poly shift = Poly::monomial(a.lc(), a.degree() - db, b.var());
    a = a * d - shift * b;
    --e;
  }
  if (e > 0) a = a * rat_pow(d, e);
  return a;
}

}  // namespace detail

// Monic gcd via the subresultant PRS.
inline Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  Poly a = poly_primitive(p), b = poly_primitive(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  Rat g(1), h(1);
  while (true) {
    int delta = a.degree() - b.degree();
    Poly r = detail::prem(a, b);
    if (r.is_zero()) return b.monic();
    if (r.degree() == 0) return Poly::constant(Rat(1), p.is_constant() ? q.var() : p.var());
    a = b;
    b = r * (Rat(1) / (g * rat_pow(h, delta)));
    g = a.lc();
    h = rat_pow(h, 1 - delta) * rat_pow(g, delta);
  }
}

// res(p, q) = lc(p)^deg(q) * prod q(alpha_i) over the roots of p.
inline Rat poly_resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Rat(0);
  if (p.degree() == 0) return rat_pow(p.lc(), q.degree());
  if (q.degree() == 0) return rat_pow(q.lc(), p.degree());
  Rat ca = poly_rat_content(p), cb = poly_rat_content(q);
  Poly a = p * (Rat(1) / ca), b = q * (Rat(1) / cb);
  Rat s(1);
  Rat t = rat_pow(ca, b.degree()) * rat_pow(cb, a.degree());
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
  }
  Rat g(1), h(1);
  while (true) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    Poly r = detail::prem(a, b);
    a = b;
    b = r * (Rat(1) / (g * rat_pow(h, delta)));
    g = a.lc();
    h = rat_pow(h, 1 - delta) * rat_pow(g, delta);
    if (b.is_zero()) return Rat(0);
    if (b.degree() == 0) break;
  }
  h = rat_pow(h, 1 - a.degree()) * rat_pow(b.lc(), a.degree());
  return s * t * h;
}

// Extended Euclid over the rationals: returns (g, u, v) with u*p + v*q = g,
// g monic (or zero).
struct PolyXgcd {
  Poly g, u, v;
};

inline PolyXgcd poly_xgcd(const Poly& p, const Poly& q) {
  char var = p.is_constant() && !q.is_constant() ? q.var() : p.var();
  Poly r0 = p, r1 = q;
  Poly u0 = Poly::constant(Rat(1), var), u1(var);
  Poly v0(var), v1 = Poly::constant(Rat(1), var);
  while (!r1.is_zero()) {
    // normalize to keep coefficient growth in check
    Rat l = r1.lc();
    if (l != 1) {
      Rat inv = Rat(1) / l;
      r1 = r1 * inv;
      u1 = u1 * inv;
      v1 = v1 * inv;
    }
    auto [qq, rr] = poly_divmod(r0, r1);
    Poly u2 = u0 - qq * u1;
    Poly v2 = v0 - qq * v1;
    r0 = r1;
    u0 = u1;
    v0 = v1;
    r1 = rr;
    u1 = u2;
    v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rat inv = Rat(1) / r0.lc();
  return {r0 * inv, u0 * inv, v0 * inv};
}

// Yun's square-free factorization.  p = lc * prod q_i^{m_i} with the q_i monic,
// square-free, pairwise coprime, multiplicities strictly increasing.
struct SquareFreeFactor {
  Poly factor;
  int multiplicity;
};

struct SquareFreeFactorization {
  Rat lc;
  std::vector<SquareFreeFactor> factors;
};

inline SquareFreeFactorization squarefree_factorization(const Poly& p) {
  assert(!p.is_zero());
  SquareFreeFactorization out;
  out.lc = p.lc();
  Poly f = p.monic();
  if (f.degree() == 0) return out;
  Poly fp = f.derivative();
  Poly g = poly_gcd(f, fp);
  if (g.degree() == 0) {
    out.factors.push_back({f, 1});
    return out;
  }
  Poly c = poly_div_exact(f, g);
  Poly d = poly_div_exact(fp, g) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    Poly a = poly_gcd(c, d);
    if (a.degree() > 0) out.factors.push_back({a, i});
    c = poly_div_exact(c, a);
    d = poly_div_exact(d, a) - c.derivative();
    ++i;
  }
  return out;
}

inline std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    Rat mag = rat_abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += (a < 0) ? "-" : "+";
    }
    bool unit = (mag == 1);
    if (i == 0) {
      out += rat_to_string(mag);
    } else {
      if (!unit) out += rat_to_string(mag) + "*";
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace gg
