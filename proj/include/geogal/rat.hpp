#pragma once

// Exact integer and rational arithmetic, GMP-backed.
// Rat is always in lowest terms with positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gg {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline int rat_sign(const Rat& a) { return sgn(a); }

inline bool rat_is_integer(const Rat& a) { return a.get_den() == 1; }

inline Int rat_floor(const Rat& a) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& a) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return q;
}

inline Rat rat_pow(const Rat& a, long k) {
  if (k == 0) return Rat(1);
  bool neg = k < 0;
  unsigned long e = neg ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), e);
  if (neg) {
    if (num == 0) throw std::domain_error("rat_pow: zero to a negative power");
    return make_rat(den, num);
  }
  return make_rat(num, den);
}

inline Int int_pow(const Int& a, unsigned long k) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

inline bool int_is_square(const Int& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int int_sqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// Exact rational square root when one exists.
inline std::optional<Rat> rat_sqrt_exact(const Rat& a) {
  if (a < 0) return std::nullopt;
  if (!int_is_square(a.get_num()) || !int_is_square(a.get_den())) return std::nullopt;
  return make_rat(int_sqrt(a.get_num()), int_sqrt(a.get_den()));
}

// Pull the largest square factor out of n (trial division up to a bound,
// then a perfect-square check on the cofactor): n = outside^2 * inside.
// `inside` need not be fully square-free for huge prime-square factors,
// which is fine: all consumers compare radicands via pairwise
// product-is-a-square tests rather than relying on canonical form.
struct SquareSplit {
  Int outside;
  Int inside;
};

inline SquareSplit int_square_split(Int n) {
  SquareSplit s{1, 1};
  if (n == 0) return SquareSplit{1, 0};
  if (n < 0) {
    s.inside = -1;
    n = -n;
  }
  for (Int p = 2; p * p <= n && p < 100000; ++p) {
    Int p2 = p * p;
    while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
      n /= p2;
      s.outside *= p;
    }
  }
  if (int_is_square(n)) {
    s.outside *= int_sqrt(n);
  } else {
    s.inside *= n;
  }
  return s;
}

inline std::string rat_to_string(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline double rat_to_double(const Rat& a) { return a.get_d(); }

}  // namespace gg
