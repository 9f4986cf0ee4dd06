#include "doctest.h"
#include "darbouxkit/apps.hpp"
#include "fixtures.hpp"

using namespace darbouxkit;
using namespace fixtures;

namespace {

Expr i_() { return Expr::imag(); }

DerivationTable free_of(std::initializer_list<const char*> names) {
  DerivationTable t;
  for (auto n : names) t.declare_free(n);
  return t;
}

bool zero_residual(const AppSystem& a) {
  LinearSystem s = a.system;
  s.table = a.fundamental.table;
  return residual(s, a.Zfund).is_zero();
}

bool skew_plus_mN(const LinearSystem& s, const Mat& N) {
  Mat B = s.A - Expr::param("m") * N;
  return m_coefficient(s.A) == N && B == -B.transpose();
}

}

TEST_CASE("frenet, Q route") {
  FrenetData d{S("kappa"), -2 * i_(), Route::Q, free_of({"kappa"})};
  auto a = frenet_family(d);
  CHECK(a.family.p == i_() * S("kappa"));
  CHECK(a.family.q == Expr(-1));
  CHECK(zero_residual(a));
  // identification: kappa = -i p
  CHECK(S("kappa") == -i_() * a.family.p);
  d.tau = S("kappa");
  try {
    frenet_family(d);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RouteConstraintViolated);
  }
}

TEST_CASE("frenet, S route") {
  FrenetData d{S("kappa"), S("tau"), Route::S, free_of({"kappa", "tau"})};
  auto a = frenet_family(d);
  Expr eta = i_() * S("kappa") - S("tau");
  CHECK(a.family.w == 2 / eta);
  CHECK(a.family.q == (S("kappa").pow(2) + S("tau").pow(2)) / 4);
  CHECK(a.family.p == -differentiate(eta, d.table) / eta);
  CHECK(zero_residual(a));
  Expr y1 = S("y1"), d1 = Expr::symbol("y1", 1);
  CHECK(a.Zfund(0, 0) == y1 * y1 + 4 * d1 * d1 / eta.pow(2));
  CHECK(a.Zfund(1, 0) == 4 * i_() * y1 * d1 / eta);
  CHECK(skew_plus_mN(perturbed_system(a, Perturbation::N3hat), perturbation_matrix(a, Perturbation::N3hat)));
  CHECK(perturbation_matrix(a, Perturbation::N3hat) ==
        (2 / eta) * Mat{{Expr(), i_(), Expr()}, {-i_(), Expr(), Expr(-1)}, {Expr(), Expr(1), Expr()}});
  try {
    perturbed_system(a, Perturbation::N3);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RouteMismatch);
  }
  FrenetData bad{i_() * S("tau"), Expr(), Route::S, free_of({"tau"})};
  bad.tau = -S("tau");
  CHECK_THROWS_AS(frenet_family(bad), Error);
}

TEST_CASE("circle on the S route") {
  auto a = frenet_family(FrenetData{Expr(1), Expr(), Route::S, {}});
  CHECK(a.family.p.is_zero());
  CHECK(a.family.q == Expr::rational(1, 4));
  CHECK(a.family.w == -2 * i_());
}

TEST_CASE("rigid, Q route") {
  RigidData d{S("w1"), 2 - i_() * S("w1"), Route::Q, free_of({"w1"})};
  auto a = rigid_family(d);
  CHECK(a.family.q == d.omega2 - 1);
  CHECK(a.family.q == 1 - i_() * S("w1"));
  CHECK(zero_residual(a));
  Mat N3{{Expr(), Expr(), Expr(-1)}, {Expr(), Expr(), i_()}, {Expr(1), -i_(), Expr()}};
  CHECK(perturbation_matrix(a, Perturbation::N3) == N3);
  CHECK(skew_plus_mN(perturbed_system(a, Perturbation::N3), N3));
  CHECK(substitute(a.system.A, {{"m", Expr()}}) == a.geometric);
  CHECK_THROWS_AS(perturbed_system(a, Perturbation::N3hat), Error);
  d.omega2 = Expr(1);
  CHECK_THROWS_AS(rigid_family(d), Error);
  auto c = rigid_family(RigidData{Expr(), Expr(2), Route::Q, {}});
  CHECK(c.family.q == Expr(1));
}

TEST_CASE("rigid, S route") {
  RigidData d{S("w1"), Expr(), Route::S, free_of({"w1"})};
  auto a = rigid_family(d);
  CHECK(a.family.w == -2 / S("w1"));
  CHECK(a.family.q == S("w1").pow(2) / 4);
  CHECK(zero_residual(a));
  Expr y1 = S("y1"), d1 = Expr::symbol("y1", 1);
  CHECK(a.Zfund(1, 0) == -4 * i_() * y1 * d1 / S("w1"));
  d.omega2 = Expr(1);
  CHECK_THROWS_AS(rigid_family(d), Error);
  d.omega2 = Expr();
  d.omega1 = Expr();
  CHECK_THROWS_AS(rigid_family(d), Error);
}

TEST_CASE("rigid chain, symbolic seed") {
  RigidData d{S("w1"), 2 - i_() * S("w1"), Route::Q, free_of({"w1"})};
  auto a = rigid_family(d);
  auto ch = application_chain(a, {S("theta0")}, 1, riccati_table(a.family));
  REQUIRE(ch.steps.size() == 1);
  Expr th = S("theta0"), m = Expr::param("m");
  Expr nu = m + th * th;
  Expr h = Expr::rational(1, 2);
  Mat T{{h * (-nu * nu + 2 * th * th - 1), h * i_() * (nu * nu - 1), th * (1 - nu)},
        {h * i_() * (nu * nu - 1), h * (nu * nu + 2 * th * th + 1), i_() * th * (1 + nu)},
        {th * (nu - 1), -i_() * th * (nu + 1), nu + th * th}};
  CHECK(ch.steps[0].T.G.P == T);
  Mat L{{-m * m, th * m, 1 - th * th}, {i_() * m * m, -i_() * th * m, i_() + i_() * th * th}, {Expr(), -m, 2 * th}};
  Mat R{{h, -h * i_(), Expr()}, {-th, i_() * th, Expr(-1)}, {h * (th * th - 1), -h * i_() * (th * th + 1), th}};
  CHECK(L * R == T);
  CHECK(skew_plus_mN(ch.steps[0].system, perturbation_matrix(a, Perturbation::N3)));
  CHECK(application_chain(a, {S("theta0")}, 0, riccati_table(a.family)).steps.empty());
}

TEST_CASE("explicit chains stay in shape") {
  auto r = rigid_family(RigidData{Expr(), Expr(2), Route::Q, {}});
  auto cr = application_chain(r, {i_()}, 3);
  REQUIRE(cr.steps.size() == 3);
  for (auto& s : cr.steps) CHECK(skew_plus_mN(s.system, perturbation_matrix(r, Perturbation::N3)));

  auto f = frenet_family(FrenetData{Expr(1), Expr(), Route::S, {}});
  auto cf = application_chain(f, {i_() / 2}, 2);
  REQUIRE(cf.steps.size() == 2);
  for (auto& s : cf.steps) CHECK(skew_plus_mN(s.system, perturbation_matrix(f, Perturbation::N3hat)));

  // x-dependent Frenet data: kappa = x, tau = 1, seed from an explicit solution
  auto g = frenet_family(FrenetData{Expr::x(), Expr(1), Route::S, {}});
  Expr th = S("theta0");
  auto cg = application_chain(g, {th}, 1, riccati_table(g.family));
  CHECK(cg.steps[0].T.G.P == t2_explicit(g.family, cg.steps[0].seed));
  CHECK(skew_plus_mN(cg.steps[0].system, perturbation_matrix(g, Perturbation::N3hat)));
}

TEST_CASE("chain rejects a bad seed") {
  auto r = rigid_family(RigidData{Expr(), Expr(2), Route::Q, {}});
  try {
    application_chain(r, {i_(), Expr::x()}, 3);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SeedNotSolution);
    CHECK(e.index() == 1);
  }
}
