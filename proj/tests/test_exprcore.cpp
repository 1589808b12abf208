#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <geogal/expr.hpp>

#include <cmath>
#include <random>

using namespace gg;

namespace {

std::mt19937 rng(771);

Rat random_rat(int mag = 6) {
  std::uniform_int_distribution<long> num(-mag, mag);
  std::uniform_int_distribution<long> den(1, mag);
  return make_rat(num(rng), den(rng));
}

Expr random_expr(int depth, bool allow_fun = true) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : (allow_fun ? 5 : 4));
  for (int attempt = 0; attempt < 40; ++attempt) {
    try {
      switch (pick(rng)) {
        case 0:
          return Expr::number(random_rat());
        case 1: {
          std::uniform_int_distribution<int> v(0, 2);
          return Expr::symbol(static_cast<Var>(v(rng)));
        }
        case 2:
          return Expr::add({random_expr(depth - 1, allow_fun), random_expr(depth - 1, allow_fun)});
        case 3:
          return Expr::mul({random_expr(depth - 1, allow_fun), random_expr(depth - 1, allow_fun)});
        case 4: {
          std::uniform_int_distribution<long> k(-4, 4);
          return Expr::pow(random_expr(depth - 1, allow_fun), k(rng));
        }
        default: {
          std::uniform_int_distribution<int> f(0, 2);
          return Expr::fun(static_cast<FunKind>(f(rng)), random_expr(depth - 1, allow_fun));
        }
      }
    } catch (const std::domain_error&) {
      // 0^-k during folding; retry
    }
  }
  return Expr::number(0L);
}

}  // namespace

TEST_CASE("parse: structure of the xyz=1 surface") {
  Expr e = parse_expr("1/(x^2-y^2)");
  CHECK(e.kind() == Expr::Kind::Pow);
  CHECK(e.exponent() == -1);
  CHECK(e.kids()[0] == parse_expr("x^2-y^2"));
}

TEST_CASE("parse: atoms and function products") {
  CHECK(parse_expr("x") == Expr::symbol(Var::X));
  Expr e = parse_expr("cos(2*x)*exp(-2*y^2)");
  REQUIRE(e.kind() == Expr::Kind::Mul);
  REQUIRE(e.kids().size() == 2);
  CHECK(e.kids()[0].kind() == Expr::Kind::Fun);
  CHECK(e.kids()[0].fun_kind() == FunKind::Cos);
  CHECK(e.kids()[1].kind() == Expr::Kind::Fun);
  CHECK(e.kids()[1].fun_kind() == FunKind::Exp);
}

TEST_CASE("parse errors carry byte offsets") {
  try {
    parse_expr("x +");
    FAIL("expected ParseError");
  } catch (const ParseError& pe) {
    CHECK(pe.offset == 3);
  }
  try {
    parse_expr("q+1");
    FAIL("expected ParseError");
  } catch (const ParseError& pe) {
    CHECK(pe.offset == 0);
  }
  CHECK_THROWS_AS(parse_expr("x^y"), ParseError);      // non-integer exponent
  CHECK_THROWS_AS(parse_expr("x^(2)"), ParseError);    // exponent must be a literal
  CHECK_THROWS_AS(parse_expr("x^70000"), ParseError);  // beyond 2^16
  CHECK_THROWS_AS(parse_expr("sin x"), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
  CHECK_THROWS_AS(parse_expr("(x"), ParseError);
}

TEST_CASE("whitespace is insignificant; no implicit multiplication") {
  CHECK(parse_expr(" 1 / ( x ^ 2 - y ^ 2 ) ") == parse_expr("1/(x^2-y^2)"));
  CHECK_THROWS_AS(parse_expr("2 x"), ParseError);
}

TEST_CASE("differentiate: exact symbolic results") {
  Expr f = parse_expr("1/(x^2-y^2)");
  CHECK(differentiate(f, Var::X) == parse_expr("-2*x*(x^2-y^2)^-2"));
  CHECK(differentiate(Expr::symbol(Var::Y), Var::Y) == Expr::number(1L));
  CHECK(differentiate(parse_expr("cos(2*x)"), Var::X) == parse_expr("-2*sin(2*x)"));
}

TEST_CASE("differentiate against a central finite-difference oracle") {
  // d/dx of (x^2-y^2)^-1 at 5 rational points, relative error < 1e-8
  Expr f = parse_expr("1/(x^2-y^2)");
  Expr fx = differentiate(f, Var::X);
  const double pts[5][2] = {{2, 1}, {3, 0.5}, {1.5, 0.25}, {-2.5, 1.25}, {4, -3}};
  const double h = 1e-6;
  for (auto& p : pts) {
    double sym = eval_double(fx, p[0], p[1], 0);
    double fd = (eval_double(f, p[0] + h, p[1], 0) - eval_double(f, p[0] - h, p[1], 0)) / (2 * h);
    CHECK(std::abs(sym - fd) / std::max(1.0, std::abs(sym)) < 1e-8);
  }
}

TEST_CASE("to_ratfun") {
  RatFun r = to_ratfun(parse_expr("1/(y^6+4)"), Var::Y);
  CHECK(r.num() == Poly::constant(Rat(1), 'y'));
  CHECK(r.den() == Poly('y', {Rat(4), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));

  // f_y(0,y) for f = (x^2-y^2)^-1 equals 2/y^3
  Expr f = parse_expr("1/(x^2-y^2)");
  Expr fy0 = substitute(differentiate(f, Var::Y), Var::X, Expr::number(0L));
  RatFun g = to_ratfun(fy0, Var::Y);
  CHECK(g == RatFun(Poly::constant(Rat(2), 'y'), Poly::monomial(Rat(1), 3, 'y')));
  for (long y0 : {2L, 3L, 5L}) {
    Bindings env{{Var::Y, CIv(Rat(y0))}};
    CIv via_expr = eval_interval(fy0, env, 96);
    CHECK(via_expr.re().contains(g.eval(Rat(y0))));
    CHECK(via_expr.im().contains(Rat(0)));
  }

  CHECK_THROWS_AS(to_ratfun(parse_expr("cos(y)"), Var::Y), NotRational);
  CHECK_THROWS_AS(to_ratfun(parse_expr("x+y"), Var::Y), WrongVariable);
}

TEST_CASE("eval_interval") {
  SUBCASE("exact square") {
    Bindings env{{Var::X, CIv(Rat(2))}};
    CIv v = eval_interval(parse_expr("x^2"), env, 64);
    CHECK(v.re().contains(Rat(4)));
    CHECK(v.width() <= make_rat(1, 1L << 40));
  }
  SUBCASE("pole detected") {
    Bindings env{{Var::X, CIv(Rat(1))}, {Var::Y, CIv(Rat(1))}};
    CHECK_THROWS_AS(eval_interval(parse_expr("1/(x^2-y^2)"), env, 64), DivisionByZeroPossible);
  }
  SUBCASE("exp(1) against a series-summation oracle") {
    Bindings env{{Var::X, CIv(Rat(1))}};
    CIv v = eval_interval(parse_expr("exp(x)"), env, 64);
    // oracle: sum_{k<=25} 1/k! with remainder <= 2/26!
    Rat sum(0), term(1);
    for (int k = 1; k <= 25; ++k) {
      sum += term;
      term /= k;
    }
    sum += term;
    Rat rem = term * 2 / 26;
    CHECK(v.re().lo() >= sum - rem - make_rat(1, 1L << 60));
    CHECK(v.re().hi() <= sum + rem + make_rat(1, 1L << 60));
    CHECK(v.re().width() < make_rat(1, Int(1000000000000000)));  // < 1e-15
    // enclosure sits inside the 10-digit bracket [2.7182818284, 2.7182818285]
    CHECK(v.re().lo() >= make_rat(27182818284L, 10000000000L));
    CHECK(v.re().hi() <= make_rat(27182818285L, 10000000000L));
  }
  SUBCASE("width shrinks as precision grows") {
    Bindings env{{Var::Y, CIv(make_rat(7, 5))}};
    Expr e = parse_expr("sin(y)*exp(y)+cos(2*y)");
    Rat w_prev;
    for (long prec : {32L, 64L, 128L}) {
      Rat w = eval_interval(e, env, prec).width();
      if (prec != 32) CHECK(w <= w_prev);
      w_prev = w;
    }
  }
  SUBCASE("unbound variable") {
    Bindings env;
    CHECK_THROWS_AS(eval_interval(parse_expr("x"), env, 32), std::invalid_argument);
  }
}

TEST_CASE("canonicalize is idempotent (randomized)") {
  for (int i = 0; i < 300; ++i) {
    Expr e = random_expr(4);
    Expr c = canonicalize(e);
    CHECK(canonicalize(c) == c);
  }
}

TEST_CASE("print/parse round-trip on canonical forms (randomized)") {
  for (int i = 0; i < 300; ++i) {
    Expr e = random_expr(4);
    CAPTURE(e.to_string());
    Expr back = parse_expr(e.to_string());
    CHECK(back == e);
  }
}

TEST_CASE("differentiation is linear (randomized)") {
  for (int i = 0; i < 100; ++i) {
    Expr e1 = random_expr(3), e2 = random_expr(3);
    Rat a = random_rat(), b = random_rat();
    Expr lhs = differentiate(Expr::number(a) * e1 + Expr::number(b) * e2, Var::Y);
    Expr rhs =
        Expr::number(a) * differentiate(e1, Var::Y) + Expr::number(b) * differentiate(e2, Var::Y);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("to_ratfun agrees with eval_interval at rational points (randomized)") {
  int done = 0;
  while (done < 25) {
    Expr e = random_expr(3, /*allow_fun=*/false);
    if (depends_on(e, Var::X) || depends_on(e, Var::Z)) continue;
    RatFun r;
    try {
      r = to_ratfun(e, Var::Y);
    } catch (const std::exception&) {
      continue;
    }
    int pts = 0;
    for (long k = 2; pts < 10 && k < 40; ++k) {
      Rat y0 = make_rat(k, 3);
      if (r.den().eval(y0) == 0) continue;
      Bindings env{{Var::Y, CIv(y0)}};
      CIv v;
      try {
        v = eval_interval(e, env, 128);
      } catch (const DivisionByZeroPossible&) {
        continue;
      }
      CHECK(v.re().contains(r.eval(y0)));
      CHECK(v.im().contains(Rat(0)));
      ++pts;
    }
    if (pts > 0) ++done;
  }
}
