#include <cmath>

#include "doctest.h"
#include "darbouxkit/apps.hpp"
#include "darbouxkit/numverify.hpp"
#include "fixtures.hpp"

using namespace darbouxkit;
using namespace fixtures;

TEST_CASE("rk4 on y'' = -y") {
  LinearSystem s = LinearSystem::minus_a(Mat{{Expr(), Expr(-1)}, {Expr(1), Expr()}});
  auto tr = integrate(s, {}, {{1.0}, {0.0}}, Interval{});
  size_t e = tr.xs.size() - 1;
  CHECK(tr.xs[e] == doctest::Approx(1.0));
  CHECK(std::abs(tr.at(e, 0) - std::cos(1.0)) < 1e-10);
  CHECK(std::abs(tr.at(e, 1) + std::sin(1.0)) < 1e-10);
  auto o = rk4_order_check();
  CHECK(o.ratio >= 12);
  CHECK(o.ratio <= 20);
}

TEST_CASE("oscillator first excited state") {
  auto f = explicit_family("0", "1 - x^2", "1", "1");
  NumericInstance inst{{}, {{"m", -2.0}}};
  auto tr = integrate(companion(f), inst, {{0.0}, {2.0}}, Interval{});
  Expr psi = hermite(1) * Expr::exp(-Expr::x() * Expr::x() / 2);
  cplx exact = evaluate(psi, {{"x", 1.0}});
  CHECK(std::abs(tr.at(tr.xs.size() - 1, 0) - exact) < 1e-8);
}

TEST_CASE("singular coefficient is reported") {
  auto f = explicit_family("0", "1/x", "1", "1");
  try {
    integrate(companion(f), {{}, {{"m", 0.0}}}, {{1.0}, {0.0}}, Interval{});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvalSingularity);
  }
  CHECK_NOTHROW(integrate(companion(f), {{}, {{"m", 0.0}}}, {{1.0}, {0.0}}, Interval{0.5, 1.5, 1e-2}));
}

TEST_CASE("rigid Q route numerics") {
  auto a = rigid_family(RigidData{Expr(), Expr(2), Route::Q, {}});
  NumericInstance inst{{}, {{"m", 0.0}}};
  Interval iv;
  auto tz = integrate(a.system, inst, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}, iv);
  Expr F = first_integral(IntegralKind::Orthogonal);
  for (size_t c = 0; c < 3; ++c) CHECK(drift(F, {"alpha", "beta", "gamma"}, tz, inst, c) <= 1e-9);
  CHECK(residual_sweep(a.Zfund, a.system, a.family, inst, iv) <= 1e-8);
  CHECK(residual_sweep(Mat(3, 3), a.system, a.family, inst, iv) == 0.0);
  CHECK(trajectory_agreement(a.Zfund, a.system, a.family, inst, iv) <= 1e-8);

  // a sign flip in Q is visible
  Mat Qbad = gauge_q().P;
  Qbad(1, 0) = -Qbad(1, 0);
  Mat Zbad = a.family.w * Qbad * a.fundamental.Y;
  CHECK(residual_sweep(Zbad, a.system, a.family, inst, iv) >= 1e-2);
}

TEST_CASE("sym2 first integral along a trajectory") {
  auto f = explicit_family("1/(x+1)", "x", "1", "x+1");
  NumericInstance inst{{}, {{"m", 0.5}}};
  auto y = sym2_system(f);
  auto tr = integrate(y, inst, {{1.0}, {0.3}, {-2.0}}, Interval{});
  CHECK(drift(first_integral(IntegralKind::Sym2, f.w), {"z1", "z2", "z3"}, tr, inst) <= 1e-8);
  CHECK(drift(Expr(5), {"z1", "z2", "z3"}, tr, inst) == 0.0);
}

TEST_CASE("frenet Q route with a registered exponential") {
  // kappa = 1 + x: w = exp(i (x + x^2/2))
  Expr x = Expr::x();
  auto a = frenet_family(FrenetData{1 + x, -2 * Expr::imag(), Route::Q, {}});
  NumericInstance inst{{{"w", Expr::exp(Expr::imag() * (x + x * x / 2))}}, {{"m", 0.25}}};
  Interval iv;
  CHECK(residual_sweep(a.Zfund, a.system, a.family, inst, iv) <= 1e-8);
  CHECK(trajectory_agreement(a.Zfund, a.system, a.family, inst, iv) <= 1e-8);
}
