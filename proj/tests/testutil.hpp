#pragma once

// shared helpers for the test suites

#include <geogal/ratfun.hpp>

namespace ggtest {

using namespace gg;

inline Poly P(std::vector<long> asc, char var = 'y') {
  std::vector<Rat> c;
  for (long x : asc) c.emplace_back(x);
  return Poly(var, std::move(c));
}

// closed-form normal-form coefficient for the x^n y^n z = 1 family,
// oriented so beta_0 = (1+2n)(2n-5)/4 (hand-rederived from the Monge patch;
// for n = 1 this is -18(2+3y^6)/(y^2(y^6+4)^2))
inline RatFun family_closed_form(long n) {
  Rat A = Rat(2) * n * n * (2 * n + 1);
  long m = 4 * n + 2;
  Poly num = (Poly::constant(Rat(4 * n * n * n - 10 * n * n), 'y') +
              Poly::monomial(Rat(-(4 * n + 5)), static_cast<int>(m), 'y')) *
             A;
  Poly q = Poly::monomial(Rat(1), static_cast<int>(m), 'y') +
           Poly::constant(Rat(4 * n * n), 'y');
  Poly den = Poly::monomial(Rat(1), 2, 'y') * q * q;
  return RatFun(num, den);
}

inline Rat family_beta0(long n) { return Rat((1 + 2 * n) * (2 * n - 5)) / 4; }

// the dihedral positive control r = -3/(16y^2) - 3/(16(y-1)^2) + 1/(8y(y-1))
inline RatFun dihedral_control() {
  Poly y = Poly::identity('y');
  Poly ym1 = y - Poly::constant(Rat(1), 'y');
  RatFun r(Poly::constant(make_rat(-3, 16), 'y'), y * y);
  r += RatFun(Poly::constant(make_rat(-3, 16), 'y'), ym1 * ym1);
  r += RatFun(Poly::constant(make_rat(1, 8), 'y'), y * ym1);
  return r;
}

}  // namespace ggtest
