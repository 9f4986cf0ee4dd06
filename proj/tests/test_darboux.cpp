#include "doctest.h"
#include "darbouxkit/darboux.hpp"
#include "fixtures.hpp"

using namespace darbouxkit;
using namespace fixtures;

namespace {

struct Generic {
  SecondOrderFamily f = generic_family();
  DarbouxSeed seed = DarbouxSeed::make(f, S("theta0"), riccati_table(f));
};

}

TEST_CASE("riccati certificate") {
  Generic g;
  CHECK(riccati_residual(g.f, S("theta0"), Expr(), g.seed.table).is_zero());
  auto osc = explicit_family("0", "1 - x^2", "1", "1");
  CHECK_NOTHROW(DarbouxSeed::make(osc, -Expr::x()));
  try {
    DarbouxSeed::make(osc, Expr::x());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SeedNotSolution);
  }
  // exp(x^2/2) solves at m = 2
  CHECK(DarbouxSeed::infer(osc, Expr::x()).m0 == Expr(2));
  CHECK_THROWS_AS(DarbouxSeed::infer(osc, Expr::x() * Expr::x()), Error);
}

TEST_CASE("transformed potential, general weight") {
  Generic g;
  auto ft = darboux_potential(g.f, g.seed);
  Expr th = S("theta0"), p = S("p"), r = S("r");
  Expr rh = differentiate(r, g.seed.table) / (2 * r);
  Expr q0 = 2 * differentiate(th, g.seed.table) + differentiate(rh, g.seed.table) +
            differentiate(p, g.seed.table) - rh * (rh + p + 2 * th);
  CHECK(ft.q == S("q") + q0);
  CHECK(ft.p == g.f.p);
  CHECK(ft.r == g.f.r);
  CHECK(!ft.q.depends_on("m"));
  CHECK(ft.potential() - g.f.potential() == q0);
}

TEST_CASE("transformed solutions solve the transformed operator") {
  Generic g;
  auto ft = darboux_potential(g.f, g.seed);
  DerivationTable t = g.seed.table;
  t.add_second_order("y1", g.f.p, g.f.potential());
  Expr yt = darboux_solution(S("y1"), g.seed, t);
  CHECK(operator_residual(ft, yt, t).is_zero());
  CHECK(!operator_residual(g.f, yt, t).is_zero());
}

TEST_CASE("gauge matrix and factorization") {
  Generic g;
  auto ft = darboux_potential(g.f, g.seed);
  auto G = darboux_gauge(g.f, g.seed);
  CHECK(G.L * G.R == G.P.P);
  CHECK(G.P.P.det() == -Expr::param("m"));
  auto s = companion(g.f);
  s.table = g.seed.table;
  CHECK(transform(s, G.P).A == companion(ft).A);
  CHECK(gauge(s, GaugeMatrix{G.P.Pinv, G.P.P}).A == companion(ft).A);
}

TEST_CASE("shifted seed") {
  auto osc = explicit_family("0", "-x^2", "1", "1");
  auto s = DarbouxSeed::infer(osc, -Expr::x());
  CHECK(s.m0 == Expr(-1));
  auto ft = darboux_potential(osc, s);
  CHECK(ft.q == parse_expr("-x^2 - 2"));
  auto G = darboux_gauge(osc, s);
  CHECK(transform(companion(osc), G.P).A == companion(ft).A);
  CHECK(G.P.P.det() == -(Expr::param("m") + 1));
}

TEST_CASE("oscillator chain is shape invariant") {
  auto osc = explicit_family("0", "1 - x^2", "1", "1");
  auto c = darboux_chain(osc, {-Expr::x()}, 3);
  REQUIRE(c.steps.size() == 3);
  CHECK(c.at(1).q == parse_expr("-x^2 - 1"));
  CHECK(c.at(2).q == parse_expr("-x^2 - 3"));
  CHECK(c.at(3).q == parse_expr("-x^2 - 5"));
  for (size_t i = 0; i < 3; ++i) {
    CHECK(c.steps[i].shape_invariant);
    CHECK(c.steps[i].shift == Expr(-2L * static_cast<long>(i + 1)));
  }
  CHECK(darboux_chain(osc, {-Expr::x()}, 0).steps.empty());
}

TEST_CASE("chain reports the failing step") {
  auto osc = explicit_family("0", "1 - x^2", "1", "1");
  try {
    darboux_chain(osc, {-Expr::x(), Expr::x() * Expr::x()}, 3);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SeedNotSolution);
    CHECK(e.index() == 1);
  }
}

TEST_CASE("nonconstant r") {
  // y0 = x solves y'' = 0
  auto f = explicit_family("0", "0", "x^2", "1");
  auto s = DarbouxSeed::make(f, 1 / Expr::x());
  auto ft = darboux_potential(f, s);
  auto G = darboux_gauge(f, s);
  CHECK(transform(companion(f), G.P).A == companion(ft).A);
  CHECK(G.L * G.R == G.P.P);
}
