#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <geogal/poly.hpp>
#include <geogal/ratfun.hpp>

#include <random>

using namespace gg;

namespace {

Poly P(std::vector<long> asc, char var = 'y') {
  std::vector<Rat> c;
  for (long x : asc) c.emplace_back(x);
  return Poly(var, std::move(c));
}

std::mt19937 rng(20240811);

Rat random_rat(int mag = 9) {
  std::uniform_int_distribution<long> num(-mag, mag);
  std::uniform_int_distribution<long> den(1, mag);
  return make_rat(num(rng), den(rng));
}

Poly random_poly(int max_deg, char var = 'y') {
  std::uniform_int_distribution<int> dd(0, max_deg);
  int d = dd(rng);
  std::vector<Rat> c(d + 1);
  for (auto& x : c) x = random_rat(5);
  return Poly(var, std::move(c));
}

Poly random_nonzero_poly(int max_deg, char var = 'y') {
  while (true) {
    Poly p = random_poly(max_deg, var);
    if (!p.is_zero()) return p;
  }
}

// Independent resultant oracle: determinant of the Sylvester matrix by plain
// rational Gaussian elimination.
Rat sylvester_det(const Poly& a, const Poly& b) {
  int m = a.degree(), n = b.degree();
  int N = m + n;
  std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];
  Rat det(1);
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    Rat inv = Rat(1) / M[col][col];
    for (int r = col + 1; r < N; ++r) {
      if (M[r][col] == 0) continue;
      Rat f = M[r][col] * inv;
      for (int cc = col; cc < N; ++cc) M[r][cc] -= f * M[col][cc];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
  Rat a = make_rat(6, -4);
  CHECK(a == make_rat(-3, 2));
  CHECK(a.get_den() == 2);  // positive denominator, lowest terms
  CHECK(rat_to_string(a) == "-3/2");
  CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK(rat_sqrt_exact(make_rat(36, 16)).value() == make_rat(3, 2));
  CHECK(!rat_sqrt_exact(Rat(-8)).has_value());
  CHECK(!rat_sqrt_exact(Rat(5)).has_value());
}

TEST_CASE("Rat field axioms (randomized)") {
  for (int i = 0; i < 200; ++i) {
    Rat a = random_rat(), b = random_rat(), c = random_rat();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
    if (a != 0) CHECK(a * (Rat(1) / a) == 1);
  }
}

TEST_CASE("poly arithmetic and division") {
  Poly p = P({-1, 0, 1});  // y^2 - 1
  Poly q = P({-1, 1});     // y - 1
  auto [quo, rem] = poly_divmod(p, q);
  CHECK(quo == P({1, 1}));
  CHECK(rem.is_zero());
  CHECK(Poly('y').degree() == -1);
  CHECK(p.eval(Rat(3)) == 8);
  CHECK(p.derivative() == P({0, 2}));
  CHECK(p.to_string() == "y^2-1");
  CHECK(P({0, -3, 0, 2}).to_string() == "2*y^3-3*y");
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));

  // gcd(y^6+4, 6 y^5) = 1; coprimality double-checked by a nonzero resultant
  Poly a = P({4, 0, 0, 0, 0, 0, 1});
  Poly b = P({0, 0, 0, 0, 0, 6});
  CHECK(poly_gcd(a, b).degree() == 0);
  CHECK(poly_resultant(a, b) != 0);

  CHECK(poly_gcd(Poly('y'), P({2, 4})) == P({2, 4}).monic());
  CHECK(poly_gcd(P({2, 4}), Poly('y')) == Poly('y', {make_rat(1, 2), Rat(1)}));
}

TEST_CASE("square-free factorization") {
  SUBCASE("(y-1)^2 (y+2)") {
    Poly p = P({-1, 1}) * P({-1, 1}) * P({2, 1});
    auto s = squarefree_factorization(p);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0].factor == P({2, 1}));
    CHECK(s.factors[0].multiplicity == 1);
    CHECK(s.factors[1].factor == P({-1, 1}));
    CHECK(s.factors[1].multiplicity == 2);
  }
  SUBCASE("y^2 (y^6+4)^2 groups to one multiplicity-2 part") {
    Poly q = P({4, 0, 0, 0, 0, 0, 1});
    Poly p = P({0, 1}) * P({0, 1}) * q * q;
    auto s = squarefree_factorization(p);
    REQUIRE(s.factors.size() == 1);
    CHECK(s.factors[0].multiplicity == 2);
    CHECK(s.factors[0].factor == P({0, 1}) * q);
  }
  SUBCASE("already square-free") {
    Poly p = P({0, -1, 0, 1});  // y^3 - y
    auto s = squarefree_factorization(p);
    REQUIRE(s.factors.size() == 1);
    CHECK(s.factors[0].factor == p);
    CHECK(s.factors[0].multiplicity == 1);
  }
  SUBCASE("reconstruction and pairwise coprimality (randomized)") {
    for (int it = 0; it < 40; ++it) {
      Poly p = random_nonzero_poly(3) * random_nonzero_poly(2) * random_nonzero_poly(2);
      if (p.degree() < 1) continue;
      auto s = squarefree_factorization(p);
      Poly rec = Poly::constant(s.lc, 'y');
      for (const auto& f : s.factors) {
        rec *= poly_pow(f.factor, f.multiplicity);
        CHECK(poly_gcd(f.factor, f.factor.derivative()).degree() == 0);
      }
      CHECK(rec == p);
      for (size_t i = 0; i < s.factors.size(); ++i)
        for (size_t j = i + 1; j < s.factors.size(); ++j)
          CHECK(poly_gcd(s.factors[i].factor, s.factors[j].factor).degree() == 0);
    }
  }
}

TEST_CASE("resultant") {
  // res(y - a, q) = q(a)
  Poly q = P({5, -2, 0, 1});
  Rat a = make_rat(3, 2);
  Poly lin(Poly('y'));
  lin = Poly('y', {-a, Rat(1)});
  CHECK(poly_resultant(lin, q) == q.eval(a));

  CHECK(poly_resultant(q, q) == 0);
  CHECK(poly_resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);

  SUBCASE("matches Sylvester determinant (randomized)") {
    for (int it = 0; it < 30; ++it) {
      Poly f = random_nonzero_poly(4);
      Poly g = random_nonzero_poly(4);
      if (f.degree() < 1 || g.degree() < 1) continue;
      CHECK(poly_resultant(f, g) == sylvester_det(f, g));
    }
  }
}

TEST_CASE("ratfun reduction invariants") {
  RatFun r(P({0, 2}), P({0, 0, 4}));  // 2y / 4y^2 = 1/(2y)
  CHECK(r.num() == P({}, 'y') + Poly::constant(make_rat(1, 2), 'y'));
  CHECK(r.den() == P({0, 1}));
  CHECK(r.den().lc() == 1);
  CHECK(poly_gcd(r.num(), r.den()).degree() == 0);
  CHECK(RatFun(Poly('y'), P({1, 1})).is_zero());
  CHECK(r.to_string() == "1/2/(y)");

  SUBCASE("field axioms (randomized)") {
    for (int i = 0; i < 200; ++i) {
      RatFun A(random_poly(3), random_nonzero_poly(2));
      RatFun B(random_poly(3), random_nonzero_poly(2));
      RatFun C(random_poly(2), random_nonzero_poly(2));
      CHECK((A + B) + C == A + (B + C));
      CHECK((A * B) * C == A * (B * C));
      CHECK(A * (B + C) == A * B + A * C);
      CHECK(A + (-A) == RatFun('y'));
      if (!A.is_zero()) CHECK(A / A == RatFun::constant(Rat(1)));
    }
  }
}

TEST_CASE("partial fractions") {
  SUBCASE("1/(y(y+1)) splits at the rational points") {
    RatFun r(Poly::constant(Rat(1), 'y'), P({0, 1}) * P({1, 1}));
    auto pf = partial_fractions(r);
    CHECK(pf.poly_part.is_zero());
    REQUIRE(pf.terms.size() == 2);  // roots in ascending order: -1, 0
    CHECK(pf.terms[0].factor == P({1, 1}));
    CHECK(pf.terms[0].u == Poly::constant(Rat(-1), 'y'));
    CHECK(pf.terms[1].factor == P({0, 1}));
    CHECK(pf.terms[1].u == Poly::constant(Rat(1), 'y'));
    CHECK(pf.reassemble() == r);
  }

  SUBCASE("xyz=1 normal form: Laurent data at y=0") {
    // r = -18(2+3y^6) / (y^2 (y^6+4)^2)
    Poly q6 = P({4, 0, 0, 0, 0, 0, 1});
    RatFun r(P({2, 0, 0, 0, 0, 0, 3}) * Rat(-18), P({0, 0, 1}) * q6 * q6);
    // independent Laurent oracle: series of y^2 r = N/E around 0,
    // beta = s0, delta = s1 with E s = N
    Poly E = q6 * q6;
    Poly N = r.num();
    Rat e0 = E.constant_term();
    Rat s0 = N.constant_term() / e0;
    Rat s1 = (N[1] - s0 * E[1]) / e0;
    CHECK(s0 == make_rat(-9, 4));
    CHECK(s1 == 0);
    auto pf = partial_fractions(r);
    CHECK(pf.reassemble() == r);
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms[0].factor == P({0, 1}));
    CHECK(pf.terms[0].multiplicity == 2);
    // 1/y^2 coefficient -9/4, 1/y coefficient 0: matches the Laurent oracle
    CHECK(pf.terms[0].v == Poly::constant(make_rat(-9, 4), 'y'));
    CHECK(pf.terms[0].u.is_zero());
    CHECK(pf.terms[1].factor == q6);
    CHECK(pf.terms[1].multiplicity == 2);
  }

  SUBCASE("pole order 3 rejected") {
    RatFun r(Poly::constant(Rat(1), 'y'), P({0, 0, 0, 1}));
    CHECK_THROWS_AS(partial_fractions(r), PoleOrderTooHigh);
  }

  SUBCASE("reassembly round-trip (200 random cases, pole orders <= 2)") {
    int done = 0;
    while (done < 200) {
      Poly q1 = random_nonzero_poly(2);
      Poly q2 = random_nonzero_poly(2);
      if (q1.degree() < 1 || q2.degree() < 1) continue;
      if (poly_gcd(q1, q1.derivative()).degree() != 0) continue;
      if (poly_gcd(q2, q2.derivative()).degree() != 0) continue;
      if (poly_gcd(q1, q2).degree() != 0) continue;
      Poly den = q1 * q2 * q2;
      Poly num = random_poly(den.degree() + 1);
      if (num.is_zero()) continue;
      RatFun r(num, den);
      auto pf = partial_fractions(r);
      CHECK(pf.reassemble() == r);
      for (const auto& t : pf.terms) {
        CHECK(t.u.degree() < t.factor.degree());
        if (t.multiplicity == 2) CHECK(t.v.degree() < t.factor.degree());
      }
      ++done;
    }
  }
}
