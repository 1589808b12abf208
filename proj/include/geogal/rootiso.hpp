#pragma once

// Certified complex root isolation for square-free rational polynomials.
// Double-precision Durand-Kerner seeds are certified in exact arithmetic: the
// disk of radius deg(p)*|p(z)/p'(z)| around z contains a root, so n pairwise
// disjoint such boxes pin down all n roots.  Also: exact extraction of the
// rational roots of a polynomial through box refinement plus
// simplest-rational reconstruction.

#include <geogal/interval.hpp>
#include <geogal/poly.hpp>

#include <complex>
#include <vector>

namespace gg {

namespace detail {

struct QPoint {
  Rat re, im;
};

inline QPoint qp_sub(const QPoint& a, const QPoint& b) { return {a.re - b.re, a.im - b.im}; }

inline QPoint qp_div(const QPoint& a, const QPoint& b) {
  Rat d = b.re * b.re + b.im * b.im;
  if (d == 0) throw std::domain_error("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline QPoint qp_round(const QPoint& a, long prec) {
  return {dyadic_floor(a.re, prec), dyadic_floor(a.im, prec)};
}

inline QPoint poly_eval_qp(const Poly& p, const QPoint& z) {
  QPoint acc{Rat(0), Rat(0)};
  for (int i = p.degree(); i >= 0; --i) {
    Rat re = acc.re * z.re - acc.im * z.im + p[i];
    Rat im = acc.re * z.im + acc.im * z.re;
    acc = {re, im};
  }
  return acc;
}

inline Rat qp_abs_upper(const QPoint& z, long prec) {
  return riv_sqrt(RIv(z.re * z.re + z.im * z.im), prec).hi();
}

// Distance from z to the nearest root of p is at most deg(p)*|p(z)/p'(z)|,
// so the square box of that half-width around z contains a root.
inline Rat root_disk_radius(const Poly& p, const Poly& dp, const QPoint& z, long prec = 64) {
  QPoint pv = poly_eval_qp(p, z);
  if (pv.re == 0 && pv.im == 0) return Rat(0);
  QPoint dv = poly_eval_qp(dp, z);
  if (dv.re == 0 && dv.im == 0) throw std::domain_error("derivative vanished at approximation");
  QPoint q = qp_div(pv, dv);
  return qp_abs_upper(q, prec) * Rat(p.degree());
}

inline CIv box_around(const QPoint& z, const Rat& r) {
  return CIv(RIv(z.re - r, z.re + r), RIv(z.im - r, z.im + r));
}

// Durand-Kerner seeds in double precision; deterministic.
inline std::vector<std::complex<double>> durand_kerner(const Poly& p) {
  int n = p.degree();
  std::vector<std::complex<double>> c(n + 1);
  // evaluate coefficient ratios exactly before converting, so gigantic
  // coefficients cannot overflow the conversion
  for (int i = 0; i <= n; ++i) c[i] = rat_to_double(Rat(p[i] / p.lc()));
  // Fujiwara bound: |root| <= 2 max_k |c_{n-k}|^{1/k}
  double radius = 0.5;
  for (int k = 1; k <= n; ++k) {
    double m = std::abs(c[n - k]);
    if (m > 0) radius = std::max(radius, std::pow(m, 1.0 / k));
  }
  radius *= 2.0;
  if (!std::isfinite(radius) || radius > 1e100) radius = 1e100;
  std::vector<std::complex<double>> z(n);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> w = seed;
  for (int i = 0; i < n; ++i) {
    z[i] = w * radius;
    w *= seed;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  };
  auto finite = [](std::complex<double> v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  };
  for (int iter = 0; iter < 1000; ++iter) {
    double move = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (denom == std::complex<double>(0, 0)) {
        z[i] += std::complex<double>(1e-4, 2e-4) * double(i + 1);
        continue;
      }
      std::complex<double> dz = eval(z[i]) / denom;
      if (!finite(dz) || !finite(z[i] - dz)) {
        z[i] = std::complex<double>(0.1 * (i + 1), 0.2 * (i + 1) + 0.3);
        continue;
      }
      z[i] -= dz;
      move = std::max(move, std::abs(dz));
    }
    if (move < 1e-14 * radius) break;
  }
  for (int i = 0; i < n; ++i)
    if (!finite(z[i])) z[i] = std::complex<double>(0.01 * (i + 1), 0.02 * i);
  return z;
}

}  // namespace detail

// Pairwise disjoint certified boxes, one per root, sorted by (re, im).
inline std::vector<CIv> isolate_roots(const Poly& p_in) {
  Poly p = p_in.monic();
  int n = p.degree();
  if (n < 1) throw std::invalid_argument("isolate_roots: degree must be >= 1");
  if (n == 1) {
    Rat root = -p[0];
    return {CIv(root, Rat(0))};
  }
  Poly dp = p.derivative();

  auto seeds = detail::durand_kerner(p);
  std::vector<detail::QPoint> z(n);
  for (int i = 0; i < n; ++i) {
    z[i] = {Rat(seeds[i].real()), Rat(seeds[i].imag())};
    z[i].re.canonicalize();
    z[i].im.canonicalize();
  }

  long prec = 64;
  for (int attempt = 0; attempt < 60; ++attempt) {
    bool ok = true;
    std::vector<Rat> radius(n);
    std::vector<CIv> boxes(n);
    for (int i = 0; i < n && ok; ++i) {
      try {
        radius[i] = detail::root_disk_radius(p, dp, z[i], prec + 16);
      } catch (const std::domain_error&) {
        ok = false;
        break;
      }
      boxes[i] = detail::box_around(z[i], radius[i]);
    }
    if (ok) {
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j)
          if (!boxes[i].disjoint(boxes[j])) ok = false;
    }
    if (ok) {
      std::sort(boxes.begin(), boxes.end(), [](const CIv& a, const CIv& b) {
        Rat ra = a.re().mid(), rb = b.re().mid();
        if (ra != rb) return ra < rb;
        return a.im().mid() < b.im().mid();
      });
      return boxes;
    }
    // polish all approximations with one exact Newton step at higher precision
    prec *= 2;
    for (int i = 0; i < n; ++i) {
      detail::QPoint pv = detail::poly_eval_qp(p, z[i]);
      detail::QPoint dv = detail::poly_eval_qp(dp, z[i]);
      if (dv.re == 0 && dv.im == 0) {
        z[i].re += make_rat(1, 1000003 + i);
        continue;
      }
      z[i] = detail::qp_round(detail::qp_sub(z[i], detail::qp_div(pv, dv)), prec);
    }
  }
  throw std::runtime_error("isolate_roots: certification failed to converge");
}

// Nested refinement of a certified root box to width < eps.
inline CIv refine_root_box(const Poly& m, const Poly& dm, const CIv& start, const Rat& eps) {
  CIv cur = start;
  if (cur.width() < eps) return cur;
  detail::QPoint z{cur.re().mid(), cur.im().mid()};
  long prec = 64;
  for (int iter = 0; iter < 400; ++iter) {
    bool stepped = false;
    detail::QPoint pv = detail::poly_eval_qp(m, z);
    detail::QPoint dv = detail::poly_eval_qp(dm, z);
    if (dv.re == 0 && dv.im == 0) {
      z.re += make_rat(1, 1000003);
      continue;
    }
    detail::QPoint znext = detail::qp_round(detail::qp_sub(z, detail::qp_div(pv, dv)), prec);
    if (!cur.re().contains(znext.re) || !cur.im().contains(znext.im)) {
      znext = detail::qp_round({cur.re().mid(), cur.im().mid()}, prec);
    }
    try {
      Rat r = detail::root_disk_radius(m, dm, znext, prec + 16);
      CIv candidate = detail::box_around(znext, r);
      // a nested candidate provably pins the same root
      if (cur.contains(candidate) && candidate.width() < cur.width()) {
        cur = candidate;
        stepped = true;
      }
    } catch (const std::domain_error&) {
      // derivative vanished at the approximation point; retry finer
    }
    z = znext;
    if (cur.width() < eps) return cur;
    if (!stepped) prec *= 2;
    prec = std::min(prec + prec / 4 + 8, 1L << 24);
  }
  throw std::runtime_error("refine_root_box: no convergence");
}

// The rational with the smallest denominator in [lo, hi] (classic
// continued-fraction bisection).
inline Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (lo == hi) return lo;
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_rational_in(Rat(-hi), Rat(-lo));
  // 0 < lo < hi
  Int fl = rat_floor(lo);
  if (Rat(fl) == lo) return lo;  // lo itself is the simplest above itself
  if (Rat(fl + 1) <= hi) return Rat(fl + 1);
  Rat inner = simplest_rational_in(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
  return Rat(fl) + Rat(1) / inner;
}

// All rational roots of a square-free polynomial, exactly.
inline std::vector<Rat> rational_roots(const Poly& q_in) {
  Poly q = q_in.monic();
  if (q.degree() < 1) return {};
  if (q.degree() == 1) return {-q[0]};
  // clear denominators: rational roots of the integer polynomial d*q have
  // denominator dividing its leading coefficient d
  Int d(1);
  for (const Rat& c : q.coeffs()) {
    Int den = c.get_den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
  }
  // boxes refined below 1/(2 d^2) contain at most one rational of denominator <= d
  Rat width_target = make_rat(Int(1), Int(2) * d * d + 1);
  Poly dq = q.derivative();
  std::vector<Rat> roots;
  for (const CIv& box0 : isolate_roots(q)) {
    CIv box = refine_root_box(q, dq, box0, width_target);
    if (box.im().excludes_zero()) continue;
    Rat c = simplest_rational_in(box.re().lo(), box.re().hi());
    if (c.get_den() <= d && q.eval(c) == 0) roots.push_back(c);
  }
  return roots;
}

}  // namespace gg
