#pragma once

// Rigorous interval arithmetic with exact rational endpoints.  Real intervals
// and complex boxes; enclosures only ever widen, so every value reported by a
// numeric path here is a mathematical statement about the exact quantity.
// Endpoints are periodically rounded outward onto a dyadic grid to keep
// coefficient sizes bounded.

#include <geogal/rat.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gg {

struct DivisionByZeroPossible : std::runtime_error {
  DivisionByZeroPossible() : std::runtime_error("denominator interval contains zero") {}
};

inline Rat dyadic_floor(const Rat& x, long prec) {
  Int scaled_num = x.get_num() << prec;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
  return make_rat(q, Int(1) << prec);
}

inline Rat dyadic_ceil(const Rat& x, long prec) {
  Int scaled_num = x.get_num() << prec;
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
  return make_rat(q, Int(1) << prec);
}

class RIv {
 public:
  RIv() : lo_(0), hi_(0) {}
  explicit RIv(const Rat& x) : lo_(x), hi_(x) {}
  RIv(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::logic_error("RIv: inverted endpoints");
  }

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat mid() const { return (lo_ + hi_) / 2; }
  Rat width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  bool contains(const RIv& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool excludes_zero() const { return lo_ > 0 || hi_ < 0; }

  friend RIv operator+(const RIv& a, const RIv& b) { return RIv(a.lo_ + b.lo_, a.hi_ + b.hi_); }
  friend RIv operator-(const RIv& a, const RIv& b) { return RIv(a.lo_ - b.hi_, a.hi_ - b.lo_); }
  RIv operator-() const { return RIv(-hi_, -lo_); }
  friend RIv operator*(const RIv& a, const RIv& b) {
    Rat p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return RIv(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }
  RIv reciprocal() const {
    if (contains_zero()) throw DivisionByZeroPossible();
    return RIv(Rat(1) / hi_, Rat(1) / lo_);
  }
  friend RIv operator/(const RIv& a, const RIv& b) { return a * b.reciprocal(); }

  RIv round_out(long prec) const { return RIv(dyadic_floor(lo_, prec), dyadic_ceil(hi_, prec)); }

  RIv hull(const RIv& o) const { return RIv(std::min(lo_, o.lo_), std::max(hi_, o.hi_)); }

  RIv widened(const Rat& r) const { return RIv(lo_ - r, hi_ + r); }

  Rat mag() const { return std::max(rat_abs(lo_), rat_abs(hi_)); }

  friend bool operator==(const RIv& a, const RIv& b) = default;

 private:
  Rat lo_, hi_;
};

inline RIv riv_pow(const RIv& x, unsigned k) {
  if (k == 0) return RIv(Rat(1));
  RIv r = x;
  for (unsigned i = 1; i < k; ++i) r = r * x;
  // even powers are nonnegative even when x straddles 0
  if (k % 2 == 0 && x.contains_zero()) {
    Rat m = r.hi();
    return RIv(Rat(0), m);
  }
  return r;
}

// Enclosure of sqrt(x) for x >= 0, width ~ 2^-prec.
inline RIv riv_sqrt(const RIv& x, long prec) {
  if (x.lo() < 0) throw std::domain_error("riv_sqrt: negative interval");
  auto point_sqrt_lo = [&](const Rat& v) {
    // floor(sqrt(v) * 2^prec) / 2^prec via integer sqrt of v * 4^prec
    Int scaled = (v.get_num() << (2 * prec)) / v.get_den();
    return make_rat(int_sqrt(scaled), Int(1) << prec);
  };
  Rat lo = point_sqrt_lo(x.lo());
  Rat hi = point_sqrt_lo(x.hi()) + make_rat(Int(1), Int(1) << prec);
  return RIv(lo, hi);
}

class CIv {
 public:
  CIv() = default;
  CIv(RIv re, RIv im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit CIv(const Rat& x) : re_(x), im_(Rat(0)) {}
  CIv(const Rat& re, const Rat& im) : re_(re), im_(im) {}

  const RIv& re() const { return re_; }
  const RIv& im() const { return im_; }
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool excludes_zero() const { return re_.excludes_zero() || im_.excludes_zero(); }
  bool is_point() const { return re_.is_point() && im_.is_point(); }
  Rat width() const { return std::max(re_.width(), im_.width()); }
  CIv mid() const { return CIv(re_.mid(), im_.mid()); }
  bool contains(const CIv& o) const { return re_.contains(o.re_) && im_.contains(o.im_); }

  friend CIv operator+(const CIv& a, const CIv& b) { return CIv(a.re_ + b.re_, a.im_ + b.im_); }
  friend CIv operator-(const CIv& a, const CIv& b) { return CIv(a.re_ - b.re_, a.im_ - b.im_); }
  CIv operator-() const { return CIv(-re_, -im_); }
  friend CIv operator*(const CIv& a, const CIv& b) {
    return CIv(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend CIv operator*(const CIv& a, const RIv& s) { return CIv(a.re_ * s, a.im_ * s); }
  friend CIv operator*(const CIv& a, const Rat& s) { return a * RIv(s); }

  RIv mag_squared() const { return riv_pow(re_, 2) + riv_pow(im_, 2); }

  CIv reciprocal() const {
    RIv m2 = mag_squared();
    if (m2.contains_zero()) throw DivisionByZeroPossible();
    RIv inv = m2.reciprocal();
    return CIv(re_ * inv, -im_ * inv);
  }
  friend CIv operator/(const CIv& a, const CIv& b) { return a * b.reciprocal(); }

  CIv round_out(long prec) const { return CIv(re_.round_out(prec), im_.round_out(prec)); }
  CIv hull(const CIv& o) const { return CIv(re_.hull(o.re_), im_.hull(o.im_)); }
  CIv widened(const Rat& r) const { return CIv(re_.widened(r), im_.widened(r)); }

  bool disjoint(const CIv& o) const {
    return re_.hi() < o.re_.lo() || o.re_.hi() < re_.lo() || im_.hi() < o.im_.lo() ||
           o.im_.hi() < im_.lo();
  }

  friend bool operator==(const CIv& a, const CIv& b) = default;

  std::string to_string() const {
    return "[" + rat_to_string(re_.lo()) + "," + rat_to_string(re_.hi()) + "] + [" +
           rat_to_string(im_.lo()) + "," + rat_to_string(im_.hi()) + "]*i";
  }

 private:
  RIv re_, im_;
};

inline CIv civ_pow(const CIv& x, long k) {
  if (k < 0) return civ_pow(x, -k).reciprocal();
  CIv r(Rat(1));
  CIv base = x;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

namespace detail {

// exp at a rational point with |t| <= 1/2, remainder-bounded Taylor series.
inline RIv exp_small(const Rat& t, long prec) {
  Rat term(1), sum(1);
  Rat abs_t = rat_abs(t);
  Rat bound = make_rat(Int(1), Int(1) << (prec + 2));
  Rat tail(1);
  int n = 1;
  while (true) {
    term *= t;
    term /= n;
    sum += term;
    // |remainder| <= 2 |t|^{n+1} / (n+1)!
    tail = rat_abs(term) * abs_t * 2 / (n + 1);
    if (tail < bound) break;
    ++n;
  }
  return RIv(sum - tail, sum + tail).round_out(prec + 4);
}

inline void sincos_small(const Rat& t, long prec, RIv& s, RIv& c) {
  Rat term(1), csum(1), ssum(t), abs_t = rat_abs(t);
  Rat bound = make_rat(Int(1), Int(1) << (prec + 2));
  // cos: sum (-1)^k t^{2k}/(2k)!, sin: sum (-1)^k t^{2k+1}/(2k+1)!
  Rat cterm(1), sterm(t), tail(1);
  int k = 0;
  while (true) {
    ++k;
    cterm *= -t * t;
    cterm /= (2 * k - 1) * (2 * k);
    csum += cterm;
    sterm *= -t * t;
    sterm /= (2 * k) * (2 * k + 1);
    ssum += sterm;
    tail = rat_abs(sterm) * abs_t * 2 / (2 * k + 2);
    Rat ctail = rat_abs(cterm) * abs_t * abs_t * 2 / ((2 * k + 1) * (2 * k + 2));
    tail = std::max(tail, ctail);
    if (tail < bound) break;
  }
  s = RIv(ssum - tail, ssum + tail).round_out(prec + 4);
  c = RIv(csum - tail, csum + tail).round_out(prec + 4);
}

}  // namespace detail

// Rigorous enclosure of exp over a real interval.
inline RIv riv_exp(const RIv& x, long prec) {
  // scale the midpoint into [-1/2, 1/2], square back up
  Rat m = x.mid();
  int k = 0;
  Rat t = m;
  while (rat_abs(t) > make_rat(1, 2)) {
    t /= 2;
    ++k;
    if (k > 64) throw std::domain_error("riv_exp: argument too large");
  }
  RIv e = detail::exp_small(t, prec + 2 * k + 4);
  for (int i = 0; i < k; ++i) e = (e * e).round_out(prec + 2 * (k - i) + 8);
  if (x.is_point()) return e.round_out(prec + 2);
  // mean value form: exp' = exp, bounded by exp(hi)
  Rat rad = x.width() / 2;
  Rat hi_m = x.hi();
  int kh = 0;
  Rat th = hi_m;
  while (rat_abs(th) > make_rat(1, 2)) {
    th /= 2;
    ++kh;
    if (kh > 64) throw std::domain_error("riv_exp: argument too large");
  }
  RIv eh = detail::exp_small(th, prec + 2 * kh + 4);
  for (int i = 0; i < kh; ++i) eh = (eh * eh).round_out(prec + 2 * (kh - i) + 8);
  Rat deriv_bound = eh.hi();
  return e.widened(rad * deriv_bound).round_out(prec + 2);
}

inline void riv_sincos(const RIv& x, long prec, RIv& s, RIv& c) {
  Rat m = x.mid();
  int k = 0;
  Rat t = m;
  while (rat_abs(t) > make_rat(1, 2)) {
    t /= 2;
    ++k;
    if (k > 64) throw std::domain_error("riv_sincos: argument too large");
  }
  RIv ss, cc;
  detail::sincos_small(t, prec + 2 * k + 4, ss, cc);
  for (int i = 0; i < k; ++i) {
    RIv s2 = (RIv(Rat(2)) * ss * cc).round_out(prec + 2 * (k - i) + 8);
    RIv c2 = (cc * cc - ss * ss).round_out(prec + 2 * (k - i) + 8);
    ss = s2;
    cc = c2;
  }
  // |sin|,|cos| <= 1 always; intersect with [-1,1]
  auto clamp = [](const RIv& v) {
    Rat lo = std::max(v.lo(), Rat(-1));
    Rat hi = std::min(v.hi(), Rat(1));
    return RIv(lo, hi);
  };
  if (!x.is_point()) {
    Rat rad = x.width() / 2;
    ss = ss.widened(rad);  // |sin'| <= 1
    cc = cc.widened(rad);
  }
  s = clamp(ss).round_out(prec + 2);
  c = clamp(cc).round_out(prec + 2);
}

inline RIv riv_sin(const RIv& x, long prec) {
  RIv s, c;
  riv_sincos(x, prec, s, c);
  return s;
}

inline RIv riv_cos(const RIv& x, long prec) {
  RIv s, c;
  riv_sincos(x, prec, s, c);
  return c;
}

// exp, sin, cos on complex boxes via the real enclosures
inline CIv civ_exp(const CIv& z, long prec) {
  RIv ea = riv_exp(z.re(), prec + 4);
  RIv s, c;
  riv_sincos(z.im(), prec + 4, s, c);
  return CIv(ea * c, ea * s).round_out(prec);
}

inline CIv civ_sin(const CIv& z, long prec) {
  RIv s, c;
  riv_sincos(z.re(), prec + 4, s, c);
  RIv ep = riv_exp(z.im(), prec + 4), en = riv_exp(-z.im(), prec + 4);
  RIv half(make_rat(1, 2));
  RIv ch = (ep + en) * half, sh = (ep - en) * half;
  return CIv(s * ch, c * sh).round_out(prec);
}

inline CIv civ_cos(const CIv& z, long prec) {
  RIv s, c;
  riv_sincos(z.re(), prec + 4, s, c);
  RIv ep = riv_exp(z.im(), prec + 4), en = riv_exp(-z.im(), prec + 4);
  RIv half(make_rat(1, 2));
  RIv ch = (ep + en) * half, sh = (ep - en) * half;
  return CIv(c * ch, -(s * sh)).round_out(prec);
}

}  // namespace gg
