#pragma once

// Reduced rational functions in one variable and their partial-fraction
// decomposition grouped by square-free denominator factor.

#include <geogal/poly.hpp>
#include <geogal/rootiso.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gg {

struct PoleOrderTooHigh : std::runtime_error {
  PoleOrderTooHigh(Poly f, int m)
      : std::runtime_error("pole order " + std::to_string(m) + " at roots of " + f.to_string()),
        factor(std::move(f)),
        multiplicity(m) {}
  Poly factor;
  int multiplicity;
};

class RatFun {
 public:
  RatFun() : num_('y'), den_(Poly::constant(Rat(1), 'y')) {}
  explicit RatFun(char var) : num_(var), den_(Poly::constant(Rat(1), var)) {}
  RatFun(Poly num, Poly den) { assign(std::move(num), std::move(den)); }
  explicit RatFun(const Poly& num) : num_(num), den_(Poly::constant(Rat(1), num.var())) {}

  static RatFun constant(const Rat& a, char var = 'y') { return RatFun(Poly::constant(a, var)); }
  static RatFun identity(char var = 'y') { return RatFun(Poly::identity(var)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  char var() const { return den_.var(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RatFun operator*(const RatFun& a, const Rat& s) { return RatFun(a.num_ * s, a.den_); }
  friend RatFun operator*(const Rat& s, const RatFun& a) { return a * s; }

  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

  RatFun derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  RatFun pow(long k) const {
    if (k < 0) {
      if (is_zero()) throw std::domain_error("RatFun: zero to a negative power");
      return RatFun(poly_pow(den_, static_cast<unsigned>(-k)),
                    poly_pow(num_, static_cast<unsigned>(-k)));
    }
    return RatFun(poly_pow(num_, static_cast<unsigned>(k)),
                  poly_pow(den_, static_cast<unsigned>(k)));
  }

  // exact evaluation; throws on a pole
  Rat eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("RatFun: evaluation at a pole");
    return num_.eval(x) / d;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    bool npar = num_.degree() > 0;
    bool dpar = den_.degree() > 0;
    return (npar ? "(" + n + ")" : n) + "/" + (dpar ? "(" + d + ")" : d);
  }

 private:
  void assign(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
    if (num.is_zero()) {
      num_ = Poly(den.var());
      den_ = Poly::constant(Rat(1), den.var());
      return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = poly_div_exact(num, g);
      den = poly_div_exact(den, g);
    }
    Rat l = den.lc();
    num_ = num * (Rat(1) / l);
    den_ = den * (Rat(1) / l);
  }

  Poly num_, den_;
};

// r = poly_part + sum_i ( U_i/q_i + V_i/q_i^2 ), q_i the square-free factors
// of the denominator, deg U_i, deg V_i < deg q_i.
struct PartialFractionTerm {
  Poly factor;       // monic square-free q_i
  int multiplicity;  // 1 or 2
  Poly u;            // numerator of 1/q_i
  Poly v;            // numerator of 1/q_i^2 (zero when multiplicity == 1)
};

struct PartialFractions {
  Poly poly_part;
  std::vector<PartialFractionTerm> terms;

  RatFun reassemble() const {
    RatFun acc(poly_part);
    for (const auto& t : terms) {
      acc += RatFun(t.u, t.factor);
      if (t.multiplicity == 2) acc += RatFun(t.v, t.factor * t.factor);
    }
    return acc;
  }
};

// Square-free factors of a denominator, with each group's exact rational
// roots pulled out as their own linear factors.  Keeps per-point data exact
// at rational singular points without ever factoring into irreducibles.
inline std::vector<SquareFreeFactor> denominator_factors(const Poly& den) {
  std::vector<SquareFreeFactor> out;
  for (const auto& f : squarefree_factorization(den).factors) {
    Poly rest = f.factor;
    std::vector<Rat> roots = rational_roots(f.factor);
    std::sort(roots.begin(), roots.end());
    for (const Rat& a : roots) {
      Poly lin(f.factor.var(), {-a, Rat(1)});
      out.push_back({lin, f.multiplicity});
      rest = poly_div_exact(rest, lin);
    }
    if (rest.degree() > 0) out.push_back({rest, f.multiplicity});
  }
  return out;
}

// Requires every square-free denominator factor to have multiplicity <= 2
// (the finite-point condition for a Fuchsian w'' = r w); throws
// PoleOrderTooHigh otherwise.
inline PartialFractions partial_fractions(const RatFun& r) {
  PartialFractions out;
  auto [quot, rest] = poly_divmod(r.num(), r.den());
  out.poly_part = quot;
  if (rest.is_zero()) return out;

  auto factors = denominator_factors(r.den());
  for (const auto& f : factors)
    if (f.multiplicity > 2) throw PoleOrderTooHigh(f.factor, f.multiplicity);

  // split rest/den across the pairwise-coprime pieces q_i^{m_i}
  for (const auto& f : factors) {
    Poly di = poly_pow(f.factor, f.multiplicity);
    Poly rest_of_den = poly_div_exact(r.den(), di);
    // n_i = rest * inv(rest_of_den) mod d_i
    auto x = poly_xgcd(rest_of_den, di);
    assert(x.g.degree() == 0);
    Poly ni = poly_mod(rest * x.u, di);
    PartialFractionTerm term;
    term.factor = f.factor;
    term.multiplicity = f.multiplicity;
    if (f.multiplicity == 1) {
      term.u = ni;
      term.v = Poly(r.var());
    } else {
      auto [u, v] = poly_divmod(ni, f.factor);
      term.u = u;
      term.v = v;
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

}  // namespace gg
