#include "doctest.h"
#include "darbouxkit/susyqm.hpp"
#include "darbouxkit/tensordt.hpp"
#include "fixtures.hpp"

using namespace darbouxkit;
using namespace fixtures;

namespace {
Expr X() { return Expr::x(); }
}

TEST_CASE("superpotentials") {
  DerivationTable t;
  auto log_d = [&](const Expr& psi) { return differentiate(psi, t) / psi; };
  CHECK(superpotential(log_d(Expr::exp(-X() * X() / 2))) == X());
  CHECK(superpotential(log_d(Expr(3))) == Expr());
  CHECK(superpotential(log_d(Expr::exp(-X().pow(3) / 3))) == X() * X());
}

TEST_CASE("partner potentials") {
  auto p = partner_potentials(X());
  CHECK(p.Vminus == X() * X() - 1);
  CHECK(p.Vplus == X() * X() + 1);
  auto z = partner_potentials(Expr());
  CHECK((z.Vminus.is_zero() && z.Vplus.is_zero()));
  auto q = partner_potentials(X() * X());
  CHECK(q.Vminus == X().pow(4) - 2 * X());
  CHECK(q.Vplus == X().pow(4) + 2 * X());
}

TEST_CASE("factorization of the hamiltonians") {
  DerivationTable t;
  t.declare_free("W");
  t.declare_free("y");
  Expr W = S("W"), y = S("y");
  auto p = partner_potentials(W, t);
  Expr d2 = differentiate(y, t, 2);
  CHECK(ladder_up(W, ladder_down(W, y, t), t) == -d2 + p.Vminus * y);
  CHECK(ladder_down(W, ladder_up(W, y, t), t) == -d2 + p.Vplus * y);
}

TEST_CASE("darboux maps -V- to -V+") {
  DerivationTable t;
  t.declare_free("W");
  Expr W = S("W");
  auto p = partner_potentials(W, t);
  auto f = SecondOrderFamily::make(Expr(), -p.Vminus, Expr(1), Expr(1), t);
  auto s = DarbouxSeed::make(f, -W);
  CHECK(darboux_potential(f, s).q == -p.Vplus);
}

TEST_CASE("matrix formalism") {
  auto p = partner_potentials(X());
  auto m2 = matrix_formalism(p, 2);
  CHECK(m2.Vminus == Mat{{Expr(), Expr(1)}, {X() * X() - 1, Expr()}});
  CHECK(m2.Vplus - m2.Vminus == Mat{{Expr(), Expr()}, {Expr(2), Expr()}});
  auto m3 = matrix_formalism(p, 3);
  CHECK(m3.Vplus - m3.Vminus ==
        Mat{{Expr(), Expr(), Expr()}, {Expr(4), Expr(), Expr()}, {Expr(), Expr(2), Expr()}});
  CHECK(m3.Vminus(1, 0) == 2 * X() * X() - 2);
  auto z = matrix_formalism(partner_potentials(Expr()), 2);
  CHECK(z.Vplus == z.Vminus);
  try {
    matrix_formalism(p, 4);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedOrder);
  }

  DerivationTable t;
  t.declare_free("W");
  auto g = matrix_formalism(partner_potentials(S("W"), t), 2, t);
  CHECK(g.Vplus - g.Vminus == 2 * differentiate(S("W"), t) * g.minusN);
  // 3x3 V- is the symmetric square lift of the 2x2 one
  auto g3 = matrix_formalism(partner_potentials(S("W"), t), 3, t);
  CHECK(g3.Vminus == -sym_lie(-g.Vminus, 2));
  CHECK(g3.minusN == -sym_lie(-g.minusN, 2));
}

TEST_CASE("darboux matrices") {
  Expr W = S("W"), l = Expr::param("lambda");
  CHECK(susy_darboux_matrix(W, l, 2) == Mat{{W, Expr(1)}, {W * W - l, W}});
  Expr v = W * W - l;
  Mat P3{{W * W, W, Expr(1)}, {2 * W * v, 2 * W * W - l, 2 * W}, {v * v, W * v, W * W}};
  CHECK(susy_darboux_matrix(W, l, 3) == P3);
  auto [L, R] = susy_darboux_factors(W, l, 3);
  CHECK(L == Mat{{Expr(), Expr(), Expr(1)}, {Expr(), -l, 2 * W}, {l * l, -l * W, W * W}});
  CHECK(R == Mat{{Expr(1), Expr(), Expr()}, {2 * W, Expr(1), Expr()}, {W * W, W, Expr(1)}});

  // same as the lifted Darboux gauge with r = 1, p = 0, theta0 = -W, m = -lambda
  DerivationTable t;
  t.declare_free("W");
  auto sp = partner_potentials(W, t);
  auto f = SecondOrderFamily::make(Expr(), -sp.Vminus, Expr(1), Expr(1), t);
  auto s = DarbouxSeed::make(f, -W);
  CHECK(substitute(lift_p1(f, s).G.P, {{"m", -l}}) == P3);
  CHECK(substitute(darboux_gauge(f, s).P.P, {{"m", -l}}) == susy_darboux_matrix(W, l, 2));
}

TEST_CASE("shape invariance and spectrum") {
  Expr a = Expr::param("a");
  auto si = shape_invariance(a * X(), a);
  CHECK(si.R == 2 * a);
  auto E = spectrum(si, 5);
  REQUIRE(E.size() == 5);
  for (int n = 0; n < 5; ++n) CHECK(E[n] == Expr(2L * n) * a);
  try {
    shape_invariance(a * X() * X(), a);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotShapeInvariant);
  }
}

TEST_CASE("oscillator states") {
  auto st = oscillator_states(5);
  Expr g = Expr::exp(-X() * X() / 2);
  CHECK(st[0][0] == g);
  CHECK(st[0][1] == -X() * g);
  CHECK(st[1][0] == 2 * X() * g);
  auto mf = matrix_formalism(partner_potentials(X()), 2);
  auto mf3 = matrix_formalism(partner_potentials(X()), 3);
  auto st3 = oscillator_states(5, 3);
  DerivationTable t;
  for (int n = 0; n <= 5; ++n) {
    CHECK(st[n][0] == hermite(n) * g);
    Expr lam(2L * n);
    for (auto& e : hamiltonian_residual(mf, false, lam, st[n], t)) CHECK(e.is_zero());
    for (auto& e : hamiltonian_residual(mf3, false, lam, st3[n], t)) CHECK(e.is_zero());
    // wrong energy is caught
    CHECK(!hamiltonian_residual(mf, false, lam + 1, st[n], t)[1].is_zero());
  }
  // the printed matrix ladder is off by lambda_{n-1} psi_{n-1} in the second slot
  for (int n = 1; n <= 5; ++n) {
    auto lit = apply_ops(mf.Adag, X(), st[n - 1], t);
    CHECK(lit[0] == st[n][0]);
    CHECK(lit[1] == st[n][1] - Expr(2L * (n - 1)) * st[n - 1][0]);
  }
  CHECK(apply_ops(mf.A, X(), st[0], t)[0].is_zero());
}
