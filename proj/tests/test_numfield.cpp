#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <geogal/algpoly.hpp>
#include <geogal/numfield.hpp>

#include <random>

using namespace gg;

namespace {

Poly P(std::vector<long> asc, char var = 't') {
  std::vector<Rat> c;
  for (long x : asc) c.emplace_back(x);
  return Poly(var, std::move(c));
}

std::mt19937 rng(555);

}  // namespace

TEST_CASE("roots_of: rational, quadratic, and the y^6+4 circle") {
  SUBCASE("y - 3") {
    auto r = roots_of(P({-3, 1}));
    REQUIRE(r.roots.size() == 1);
    CHECK(r.ctx->box(0).re().contains(Rat(3)));
    CHECK(r.ctx->box(0).width() == 0);
  }
  SUBCASE("y^2 + 1") {
    auto r = roots_of(P({1, 0, 1}));
    REQUIRE(r.roots.size() == 2);
    // boxes around -i and +i (sorted by (re, im))
    CHECK(r.ctx->box(0).im().hi() < 0);
    CHECK(r.ctx->box(1).im().lo() > 0);
    for (int i = 0; i < 2; ++i) {
      CIv b = r.ctx->refine_box(i, make_rat(1, 1000000));
      CHECK(b.re().contains(Rat(0)));
      CHECK(b.re().width() < make_rat(1, 100000));
    }
  }
  SUBCASE("y^6 + 4: every |root|^6 lies in [4-eps, 4+eps]") {
    auto r = roots_of(P({4, 0, 0, 0, 0, 0, 1}));
    REQUIRE(r.roots.size() == 6);
    for (int i = 0; i < 6; ++i) {
      CIv b = r.ctx->refine_box(i, make_rat(1, 1 << 24));
      RIv mag6 = riv_pow(b.mag_squared(), 3);
      CHECK(mag6.lo() > Rat(4) - make_rat(1, 1000));
      CHECK(mag6.hi() < Rat(4) + make_rat(1, 1000));
    }
    // pairwise disjoint
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) CHECK(r.ctx->box(i).disjoint(r.ctx->box(j)));
  }
}

TEST_CASE("alg_arith in Q[t]/(t^2-2)") {
  auto ctx = FieldCtx::make(P({-2, 0, 1}));
  AlgNum t = AlgNum::generator(ctx, 1);  // positive sqrt(2)
  SUBCASE("t*t = 2") {
    auto r = alg_arith(ArithOp::Mul, t, t);
    REQUIRE(std::holds_alternative<AlgNum>(r));
    CHECK(std::get<AlgNum>(r).rep() == Poly::constant(Rat(2), 't'));
  }
  SUBCASE("inv(t) = t/2, multiply-back gives 1") {
    auto r = alg_arith(ArithOp::Inv, t, t);
    REQUIRE(std::holds_alternative<AlgNum>(r));
    AlgNum inv = std::get<AlgNum>(r);
    CHECK(inv.rep() == Poly('t', {Rat(0), make_rat(1, 2)}));
    CHECK((t * inv).rep() == Poly::constant(Rat(1), 't'));
  }
}

TEST_CASE("zero divisor in Q[t]/(t^2-1) splits the modulus") {
  auto ctx = FieldCtx::make(P({-1, 0, 1}));
  AlgNum x(ctx, P({-1, 1}), 1);  // t - 1
  auto r = alg_arith(ArithOp::Inv, x, x);
  REQUIRE(std::holds_alternative<SplitSignal>(r));
  auto s = std::get<SplitSignal>(r);
  CHECK(s.m1 * s.m2 == ctx->modulus());
  CHECK(poly_gcd(s.m1, s.m1.derivative()).degree() == 0);
  CHECK(poly_gcd(s.m2, s.m2.derivative()).degree() == 0);
  // branch contexts carry disjoint box subsets of the right cardinality
  CtxPtr b1 = branch_ctx(ctx, s.m1);
  CtxPtr b2 = branch_ctx(ctx, s.m2);
  CHECK(static_cast<int>(b1->num_roots()) == s.m1.degree());
  CHECK(static_cast<int>(b2->num_roots()) == s.m2.degree());
}

TEST_CASE("inverse round-trip on random elements (degree <= 12 ctx)") {
  // x * inv(x) reduces to 1 for 100 random nonzero elements
  auto ctx = FieldCtx::make(P({2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));  // t^12 + 2
  std::uniform_int_distribution<long> coeff(-4, 4);
  int done = 0;
  while (done < 100) {
    std::vector<Rat> c(12);
    for (auto& x : c) x = Rat(coeff(rng));
    Poly rep('t', std::move(c));
    if (rep.is_zero()) continue;
    AlgNum x(ctx, rep, 0);
    AlgNum inv = x.inverse();  // t^12+2 has no rational factors of low degree; splits unexpected
    CHECK((x * inv).rep() == Poly::constant(Rat(1), 't'));
    ++done;
  }
}

TEST_CASE("refine_box nests and halves") {
  auto ctx = FieldCtx::make(P({4, 0, 0, 0, 0, 0, 1}));
  SUBCASE("refined box stays inside the original") {
    for (int i = 0; i < 6; ++i) {
      CIv original = ctx->box(i);
      CIv fine = ctx->refine_box(i, make_rat(1, 1 << 20));
      CHECK(original.contains(fine));
    }
  }
  SUBCASE("width halves or better per refinement round") {
    Rat eps = ctx->box(2).width();
    if (eps == 0) return;
    CIv prev = ctx->box(2);
    for (int round = 0; round < 100; ++round) {
      eps = eps / 2;
      if (eps == 0) break;
      CIv cur = ctx->refine_box(2, eps);
      CHECK(cur.width() < std::max(prev.width(), Rat(eps * 2)));
      CHECK(cur.width() <= eps);
      prev = cur;
    }
  }
}

TEST_CASE("embedding soundness: arithmetic matches interval arithmetic") {
  auto ctx = FieldCtx::make(P({4, 0, 0, 0, 0, 0, 1}));
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int it = 0; it < 20; ++it) {
    std::vector<Rat> c1(6), c2(6);
    for (auto& x : c1) x = Rat(coeff(rng));
    for (auto& x : c2) x = Rat(coeff(rng));
    AlgNum a(ctx, Poly('t', std::move(c1)), 3);
    AlgNum b(ctx, Poly('t', std::move(c2)), 3);
    CIv prod = (a * b).embed(80);
    CIv ia = a.embed(90), ib = b.embed(90);
    CIv direct = ia * ib;
    // enclosures of the same number must intersect at width ~1e-12
    CHECK(!prod.disjoint(direct));
    CHECK(prod.width() < make_rat(1, Int("1000000000000")));
  }
}

TEST_CASE("sum_over_roots") {
  CHECK(sum_over_roots(P({0, 1}), P({-2, 0, 1})) == 0);                       // sum of roots of t^2-2
  CHECK(sum_over_roots(P({0, 0, 1}), P({4, 0, 0, 0, 0, 0, 1})) == 0);         // sum rho^2 over y^6+4
  CHECK(sum_over_roots(Poly::constant(make_rat(5, 16), 't'),
                       P({4, 0, 0, 0, 0, 0, 1})) == make_rat(30, 16));        // 6 * 5/16
  CHECK(sum_over_roots(P({0, 0, 1}), P({-2, 0, 1})) == 4);                    // 2+2
  SUBCASE("agrees with numeric summation over refined boxes") {
    for (const Poly& q : {P({4, 0, 0, 0, 0, 0, 1}), P({-2, 0, 1}), P({1, 3, 0, 0, 1})}) {
      Poly formula = P({1, 2, 0, 1});  // 1 + 2a + a^3
      Rat exact = sum_over_roots(formula, q);
      auto ctx = FieldCtx::make(q);
      CIv acc = CIv(Rat(0));
      for (size_t i = 0; i < ctx->num_roots(); ++i) {
        CIv b = ctx->refine_box(static_cast<int>(i), make_rat(1, 1L << 40));
        CIv v(Rat(0));
        for (int k2 = formula.degree(); k2 >= 0; --k2) v = v * b + CIv(formula[k2]);
        acc = acc + v;
      }
      CHECK(acc.re().contains(exact));
      CHECK(acc.im().contains(Rat(0)));
    }
  }
}

TEST_CASE("linear_solve") {
  auto ctx = FieldCtx::make(P({-2, 0, 1}));
  AlgNum one = AlgNum::from_rat(ctx, Rat(1));
  AlgNum zero = AlgNum::from_rat(ctx, Rat(0));
  AlgNum t = AlgNum::generator(ctx, 1);

  SUBCASE("identity") {
    std::vector<std::vector<AlgNum>> M = {{one, zero}, {zero, one}};
    std::vector<AlgNum> v = {t, one + t};
    auto out = linear_solve(M, v, ctx);
    REQUIRE(out.status == SolveStatus::Solution);
    CHECK(out.solution[0].rep() == t.rep());
    CHECK(out.solution[1].rep() == (one + t).rep());
  }
  SUBCASE("0*x = 1 is inconsistent with a verifiable certificate") {
    std::vector<std::vector<AlgNum>> M = {{zero}};
    std::vector<AlgNum> v = {one};
    auto out = linear_solve(M, v, ctx);
    REQUIRE(out.status == SolveStatus::Inconsistent);
    CHECK(verify_inconsistency_certificate(M, v, ctx, out.certificate_u));
  }
  SUBCASE("algebraic 2x2 with exact solution") {
    // [ t 1 ; 1 t ] x = [ 1 ; 0 ]  =>  x = ( t, -1 )/(t^2-1) = (t,-1)/1
    std::vector<std::vector<AlgNum>> M = {{t, one}, {one, t}};
    std::vector<AlgNum> v = {one, zero};
    auto out = linear_solve(M, v, ctx);
    REQUIRE(out.status == SolveStatus::Solution);
    // verify M x = v exactly
    for (int i = 0; i < 2; ++i) {
      AlgNum acc = zero;
      for (int j = 0; j < 2; ++j) acc = acc + M[i][j] * out.solution[j];
      CHECK(acc.rep() == v[i].rep());
    }
  }
  SUBCASE("split propagation solves both branches") {
    auto rctx = FieldCtx::make(P({-1, 0, 1}));  // t^2 - 1, reducible
    AlgNum rt = AlgNum::generator(rctx, 1);
    AlgNum rone = AlgNum::from_rat(rctx, Rat(1));
    // (t-1) x = 1: inconsistent where t=1, solvable where t=-1
    std::vector<std::vector<AlgNum>> M = {{rt - rone}};
    std::vector<AlgNum> v = {rone};
    auto leaves = linear_solve_all_branches(M, v, rctx);
    REQUIRE(leaves.size() == 2);
    int n_sol = 0, n_inc = 0;
    for (auto& [c, o] : leaves) {
      if (o.status == SolveStatus::Solution) ++n_sol;
      if (o.status == SolveStatus::Inconsistent) ++n_inc;
    }
    CHECK(n_sol == 1);
    CHECK(n_inc == 1);
  }
}

TEST_CASE("tower adjunction: two roots of y^6+4 in one primitive field") {
  Poly q = P({4, 0, 0, 0, 0, 0, 1});
  auto qroots = roots_of(q);
  Tower tw;
  int i0 = tower_adjoin(tw, RootRef{q, qroots.ctx, 0});
  CHECK(tw.ctx->degree() == 6);
  CHECK(APoly::lift(q, tw.ctx, 'y').eval_rep(tw.adjoined[i0].rep()).is_zero());

  int i1 = tower_adjoin(tw, RootRef{q, qroots.ctx, 1}, {i0});
  CHECK(tw.ctx->degree() == 30);
  // both adjoined roots satisfy q in the flattened field
  for (const AlgNum& r : tw.adjoined)
    CHECK(APoly::lift(q, tw.ctx, 'y').eval_rep(r.rep()).is_zero());
  // and they are distinct ring elements
  CHECK(tw.adjoined[0].rep() != tw.adjoined[1].rep());
  // embeddings match the original boxes
  CIv e0 = tw.adjoined[0].embed(160);
  CIv e1 = tw.adjoined[1].embed(160);
  CHECK(!e0.disjoint(qroots.ctx->box(0)));
  CHECK(!e1.disjoint(qroots.ctx->box(1)));
  CHECK(e0.disjoint(qroots.ctx->box(1)));
  (void)i1;
}
