// Acceptance run: one PASS/FAIL line per criterion, plus notes on printed
// formulas that disagree with the derived ones. Exit status is the number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "darbouxkit/apps.hpp"
#include "darbouxkit/commands.hpp"
#include "darbouxkit/numverify.hpp"
#include "darbouxkit/susyqm.hpp"

using namespace darbouxkit;

namespace {

Expr S(const char* n) { return Expr::symbol(n); }
Expr I() { return Expr::imag(); }
Expr M() { return Expr::param("m"); }
Expr Z0() { return Expr(); }

struct Run {
  std::vector<std::string> failed;
  int total = 0;
  void check(const std::string& what, bool ok) {
    ++total;
    if (!ok) failed.push_back(what);
  }
};

std::vector<std::string> notes;

void note(const std::string& s, bool confirmed) {
  notes.push_back(s + (confirmed ? " [confirmed]" : " [NOT reproduced]"));
}

SecondOrderFamily generic_family() {
  DerivationTable t;
  for (auto n : {"p", "q", "r"}) t.declare_free(n);
  t.set("w", 0, S("p") * S("w"));
  return SecondOrderFamily::make(S("p"), S("q"), S("r"), S("w"), t);
}

struct Generic {
  SecondOrderFamily f = generic_family();
  DarbouxSeed s = DarbouxSeed::make(f, S("theta0"), riccati_table(f));
  SecondOrderFamily ft = darboux_potential(f, s);
  Expr th = s.theta0, rho = s.rho, nu = s.nu, r = S("r"), w = S("w"), p = S("p");
  Generic() { f.table = s.table; }
};

// entries where two matrices differ
std::vector<std::pair<int, int>> diff_entries(const Mat& a, const Mat& b) {
  std::vector<std::pair<int, int>> v;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) v.emplace_back(int(i) + 1, int(j) + 1);
  return v;
}

// ---- 1 ----
void darboux_covariance(Run& r) {
  Generic g;
  DerivationTable t = g.s.table;
  t.add_second_order("y1", g.f.p, g.f.potential());
  Expr yt = darboux_solution(S("y1"), g.s, t);
  r.check("transformed solution residual is 0", operator_residual(g.ft, yt, t).is_zero());
  Expr q0 = darboux_q0(g.f, g.s);
  r.check("q + q0 equals the compact formula", g.f.q + q0 == darboux_q_compact(g.f, g.s));
  r.check("q~ = q + q0", g.ft.q == g.f.q + q0);
  // printed q0 uses rh(rh + 2p - 4 theta0)
  Expr rh = differentiate(g.r, g.f.table) / (2 * g.r);
  Expr printed = 2 * differentiate(g.th, g.f.table) + differentiate(rh, g.f.table) + differentiate(g.p, g.f.table) -
                 rh * (rh + 2 * g.p - 4 * g.th);
  note("printed q0 minus true q0 = (6 theta0 - p) r'/(2r)", printed - q0 == (6 * g.th - g.p) * rh);
  // with p = 0, r = 1 the classical q + 2 theta0'
  DerivationTable ts;
  ts.declare_free("q");
  auto sch = SecondOrderFamily::make(Z0(), S("q"), Expr(1), Expr(1), ts);
  auto ss = DarbouxSeed::make(sch, S("theta0"), riccati_table(sch));
  r.check("Schroedinger case q~ = q + 2 theta0'",
          darboux_potential(sch, ss).q == S("q") + 2 * differentiate(S("theta0"), ss.table));
}

// ---- 2 ----
void gauge_equivalence(Run& r) {
  Generic g;
  auto G = darboux_gauge(g.f, g.s);
  r.check("P = L R", G.L * G.R == G.P.P);
  r.check("det P = -m", G.P.P.det() == -M());
  Mat P = (1 / Expr::sqrt(g.r)) * Mat{{-g.th, Expr(1)}, {g.nu, g.rho}};
  r.check("P matches its closed form", G.P.P == P);
  r.check("companion(A) is sent to companion(A~)", transform(companion(g.f), G.P).A == companion(g.ft).A);
}

// ---- 3 ----
void symmetric_powers(Run& r) {
  auto f = generic_family();
  Expr p = S("p"), q = S("q"), rr = S("r"), w = S("w");
  Mat S2{{Z0(), Expr(-1), Z0()}, {2 * q, p, Expr(-2)}, {Z0(), q, 2 * p}};
  Mat N2{{Z0(), Z0(), Z0()}, {-2 * rr, Z0(), Z0()}, {Z0(), -rr, Z0()}};
  Mat S2h{{Z0(), -1 / w, Z0()}, {2 * w * q, Z0(), -2 / w}, {Z0(), w * q, Z0()}};
  Mat N2h{{Z0(), Z0(), Z0()}, {-2 * w * rr, Z0(), Z0()}, {Z0(), -w * rr, Z0()}};
  r.check("sym2(A0) = S2", sym_lie(companion_a0(f), 2) == S2);
  r.check("sym2(N) = N2", sym_lie(companion_n(f), 2) == N2);
  Mat B = sl2_system(f).A;
  r.check("sym2(B0) = S2^", sym_lie(substitute(B, {{"m", Z0()}}), 2) == S2h);
  r.check("sym2(N1) = N2^", sym_lie(m_coefficient(B), 2) == N2h);
  r.check("sym2 system is S2 + m N2", sym2_system(f).A == S2 + M() * N2);
  r.check("sym2 sl2 system is S2^ + m N2^", sym2_sl2_system(f).A == S2h + M() * N2h);

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> d(-5, 5);
  auto rnd = [&] {
    Mat a(2, 2);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) a(i, j) = Expr(GaussRat(mpq_class(d(rng), 1 + (d(rng) + 5) % 3), mpq_class(d(rng))));
    return a;
  };
  bool ok = true;
  for (int k = 0; k < 50; ++k) {
    Mat a = rnd(), b = rnd();
    ok = ok && sym_group(a * b, 2) == sym_group(a, 2) * sym_group(b, 2);
  }
  r.check("Sym2(AB) = Sym2(A) Sym2(B) on 50 random matrices", ok);

  LinearSystem s = companion(f);
  s.table = solution_table(f);
  r.check("Sym2(X) solves the sym2 system", residual(sym_system(s, 2), sym_group(companion_fundamental(), 2)).is_zero());
}

// ---- 4 ----
void lifted_transformations(Run& r) {
  Generic g;
  Expr th = g.th, rho = g.rho, nu = g.nu, rr = g.r, w = g.w, m = M();
  auto Pm = darboux_gauge(g.f, g.s).P.P;
  Mat D = Mat::diag({Expr(1), w}), Dinv = Mat::diag({Expr(1), 1 / w});
  auto P1 = lift_p1(g.f, g.s), P2 = lift_p2(g.f, g.s), T1 = lift_t1(g.f, g.s), T2 = lift_t2(g.f, g.s);
  const Mat& Q = gauge_q().P;
  const Mat& Qi = gauge_q().Pinv;
  const Mat& Sg = gauge_s().P;
  const Mat& Si = gauge_s().Pinv;

  r.check("P1 = Sym2(P)", P1.G.P == sym_group(Pm, 2));
  r.check("P2 = Sym2(Delta P Delta^-1)", P2.G.P == sym_group(D * Pm * Dinv, 2));
  r.check("T1 = Q P1 Q^-1", T1.G.P == Q * P1.G.P * Qi);
  r.check("T2 = S P2 S^-1", T2.G.P == Sg * P2.G.P * Si);

  // printed P1 and its factorization
  Mat P1_printed = (1 / rr) * Mat{{th * th, -th, Expr(1)}, {2 * th * nu, nu - th * rho, 2 * rho}, {nu * nu, -rho * nu, rho * rho}};
  Mat P1_fact = (1 / rr) * Mat{{Z0(), Z0(), Expr(1)}, {Z0(), m * rr, 2 * rho}, {m * m * rr * rr, rho * m * rr, rho * rho}} *
                Mat{{Expr(1), Z0(), Z0()}, {-2 * th, Expr(1), Z0()}, {th * th, -th, Expr(1)}};
  r.check("P1 equals its printed factorization", P1.G.P == P1_fact);
  r.check("P1 equals the corrected closed form", P1.G.P == p1_explicit(g.f, g.s));
  auto d1 = diff_entries(P1_printed, P1.G.P);
  note("printed P1 differs from Sym2(P) exactly at (2,1) and (3,2)",
       d1 == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});

  // printed P2 and its factorization
  Mat P2_printed = (1 / rr) * Mat{{th * th, -w * th, w * w},
                                  {-2 * th * nu / w, nu - rho * th, 2 * w * rho},
                                  {nu * nu / (w * w), rho * nu / w, rho * rho}};
  Mat P2_fact = (1 / rr) *
                Mat{{Z0(), Z0(), Expr(1)}, {Z0(), w * m * rr, 2 * w * rho}, {w * w * m * m * rr * rr, w * w * rho * m * rr, w * w * rho * rho}} *
                Mat{{Expr(1), Z0(), Z0()}, {-2 * th, 1 / w, Z0()}, {th * th, -th / w, 1 / (w * w)}};
  r.check("P2 equals its printed factorization", P2.G.P == P2_fact);
  r.check("P2 equals the corrected closed form", P2.G.P == p2_explicit(g.f, g.s));
  note("printed P2 equals Sym2(Delta^-1 P Delta) (w and 1/w swapped)", P2_printed == sym_group(Dinv * Pm * D, 2));

  // printed T1 and its factorization
  Mat T1_printed = (1 / (2 * rr)) *
                   Mat{{-nu * nu + rho * rho + th * th - 1, I() * (nu * nu + rho * rho - th * th - 1), 2 * (nu * rho + th)},
                       {I() * (nu * nu - rho * rho + th * th - 1), nu * nu + rho * rho + th * th + 1, 2 * I() * (th - nu * rho)},
                       {2 * (nu * th + rho), -2 * I() * (nu * th - rho), 2 * (nu - th * rho)}};
  Mat T1_left{{-m * m * rr * rr, -rho * m * rr, 1 - rho * rho},
              {I() * m * m * rr * rr, I() * rho * m * rr, I() + I() * rho * rho},
              {Z0(), -m * rr, -2 * rho}};
  Mat T1_right{{Expr::rational(1, 2), -I() / 2, Z0()},
               {-th, I() * th, Expr(-1)},
               {(th * th - 1) / 2, -I() * (th * th + 1) / 2, th}};
  r.check("T1 equals the printed matrix", T1.G.P == T1_printed);
  r.check("T1 = (1/r) x printed factorization", T1.G.P == (1 / rr) * T1_left * T1_right);
  r.check("T1 factors are Q Sym2(L) and Sym2(R') Q^-1", T1_left == Q * sym_group(darboux_gauge(g.f, g.s).L, 2) &&
                                                            T1_right == sym_group(Mat{{Expr(1), Z0()}, {-th, Expr(1)}}, 2) * Qi);
  note("printed T1 factorization omits the overall 1/r", T1_left * T1_right != T1.G.P);

  // printed T2
  Mat T2_printed = (1 / (2 * rr)) *
                   Mat{{w * w + rho * rho + th * th + nu * nu / (w * w), 2 * I() * (w * th - nu * rho / w),
                        I() * (w * w + rho * rho - th * th - nu * nu / (w * w))},
                       {2 * I() * (w * rho - nu * th / w), 2 * (nu - rho * th), -2 * (w * rho + nu * th / w)},
                       {I() * (w * w - rho * rho + th * th - nu * nu / (w * w)), -2 * (w * th + nu * rho / w),
                        -w * w + rho * rho + th * th - nu * nu / (w * w)}};
  r.check("T2 equals the corrected closed form", T2.G.P == t2_explicit(g.f, g.s));
  r.check("T2 equals the printed matrix with w -> 1/w", T2.G.P == substitute(T2_printed, {{"w", 1 / w}}, g.f.table));
  note("printed T2 equals S Sym2(Delta^-1 P Delta) S^-1", T2_printed == Sg * sym_group(Dinv * Pm * D, 2) * Si);
  r.check("T2 = left x right", T2.left * T2.right == T2.G.P);

  r.check("det P1 = -m^3", P1.G.P.det() == -m.pow(3));
  r.check("det P2 = -m^3", P2.G.P.det() == -m.pow(3));

  DerivationTable t;
  t.declare_free("q");
  t.declare_free("r");
  auto f1 = SecondOrderFamily::make(Z0(), S("q"), S("r"), Expr(1), t);
  auto s1 = DarbouxSeed::make(f1, S("theta0"), riccati_table(f1));
  r.check("P2 = P1 when w = 1", lift_p1(f1, s1).G.P == lift_p2(f1, s1).G.P);

  r.check("diagram 1: P1 maps sym2 systems", transform(sym2_system(g.f), P1.G).A == sym2_system(g.ft).A);
  r.check("diagram 1: T1 maps so3 systems", transform(so3_q_system(g.f), T1.G).A == so3_q_system(g.ft).A);
  r.check("diagram 1: Q route vs gauge Q", so3_q_system(g.f).A == transform(sym2_system(g.f), GaugeMatrix::make(g.w * Q)).A);
  r.check("diagram 2: Delta P Delta^-1 maps sl2 systems",
          transform(sl2_system(g.f), GaugeMatrix::make(D * Pm * Dinv)).A == sl2_system(g.ft).A);
  r.check("diagram 2: P2 maps sym2 sl2 systems", transform(sym2_sl2_system(g.f), P2.G).A == sym2_sl2_system(g.ft).A);
  r.check("diagram 2: T2 maps so3 systems", transform(so3_s_system(g.f), T2.G).A == so3_s_system(g.ft).A);
}

// ---- 5 ----
void first_integrals(Run& r) {
  OrthogonalSystem o{S("f"), S("g"), S("h"), {}};
  for (auto n : {"f", "g", "h"}) o.table.declare_free(n);
  r.check("d/dx (alpha^2 + beta^2 + gamma^2) = 0",
          flow_derivative(first_integral(IntegralKind::Orthogonal), {"alpha", "beta", "gamma"}, o.system()).is_zero());
  auto f = generic_family();
  r.check("d/dx w^2 (4 z1 z3 - z2^2) = 0",
          flow_derivative(first_integral(IntegralKind::Sym2, f.w), {"z1", "z2", "z3"}, sym2_system(f)).is_zero());

  Interval iv;  // h = 1e-3 on [0, 1]
  Expr x = Expr::x();
  auto rig = rigid_family(RigidData{1 + x, 2 - I() * (1 + x), Route::Q, {}});
  NumericInstance inst{{}, {{"m", 0.3}}};
  auto tz = integrate(rig.system, inst, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}, iv);
  double worst = 0;
  for (size_t c = 0; c < 3; ++c)
    worst = std::max(worst, drift(first_integral(IntegralKind::Orthogonal), {"alpha", "beta", "gamma"}, tz, inst, c));
  r.check("orthogonal drift <= 1e-8 (" + std::to_string(worst) + ")", worst <= 1e-8);

  auto fe = SecondOrderFamily::make(1 / (x + 1), x, Expr(1), x + 1, {});
  auto ty = integrate(sym2_system(fe), NumericInstance{{}, {{"m", 0.5}}}, {{1.0}, {0.3}, {-2.0}}, iv);
  double d2 = drift(first_integral(IntegralKind::Sym2, fe.w), {"z1", "z2", "z3"}, ty, NumericInstance{{}, {{"m", 0.5}}});
  r.check("sym2 drift <= 1e-8 (" + std::to_string(d2) + ")", d2 <= 1e-8);
}

// ---- 6 ----
void theorem_two(Run& r) {
  auto z = riccati_parametrize(S("u"), S("v"));
  r.check("alpha^2 + beta^2 + gamma^2 = 1 identically", z[0] * z[0] + z[1] * z[1] + z[2] * z[2] == Expr(1));
  OrthogonalSystem o{S("f"), S("g"), S("h"), {}};
  for (auto n : {"f", "g", "h"}) o.table.declare_free(n);
  auto R = so3_to_riccati(o);
  DerivationTable t = o.table;
  for (auto n : {"u", "v"}) t.set(n, 0, R.omega0 + R.mu * S(n) + R.omega1 * S(n) * S(n));
  Mat Z = Mat::column(z);
  r.check("Riccati solutions give solutions of Z' = skew Z", (differentiate(Z, t) - o.matrix() * Z).is_zero());
  r.check("u recovered from (alpha, beta, gamma)", riccati_invert(z[0], z[1], z[2]) == S("u"));
  DerivationTable lt = o.table;
  lt.add_second_order("y", R.lin_p, R.lin_c);
  Expr u = -differentiate(S("y"), lt) / (R.omega1 * S("y"));
  r.check("linear form agrees with the Riccati equation via u = -(1/omega1) y'/y",
          differentiate(u, lt) == R.omega0 + R.mu * u + R.omega1 * u * u);
  // printed linear form: y'' + (mu omega1 + omega1'/omega1) y' + omega0 omega1 y = 0
  DerivationTable pt = o.table;
  Expr w1p = differentiate(R.omega1, o.table);
  pt.add_second_order("y", R.mu * R.omega1 + w1p / R.omega1, R.omega0 * R.omega1);
  Expr up = -differentiate(S("y"), pt) / (R.omega1 * S("y"));
  note("printed linear form of Theorem 2 does not linearize the Riccati equation",
       differentiate(up, pt) != R.omega0 + R.mu * up + R.omega1 * up * up);
}

// ---- 7 ----
void susy_oscillator(Run& r) {
  Expr x = Expr::x();
  auto pr = partner_potentials(x);
  r.check("V- = x^2 - 1", pr.Vminus == x * x - 1);
  r.check("V+ = x^2 + 1", pr.Vplus == x * x + 1);
  auto m2 = matrix_formalism(pr, 2), m3 = matrix_formalism(pr, 3);
  r.check("2x2 remainder [[0,0],[2,0]]", m2.Vplus - m2.Vminus == Mat{{Z0(), Z0()}, {Expr(2), Z0()}});
  r.check("3x3 remainder [[0,0,0],[4,0,0],[0,2,0]]",
          m3.Vplus - m3.Vminus == Mat{{Z0(), Z0(), Z0()}, {Expr(4), Z0(), Z0()}, {Z0(), Expr(2), Z0()}});
  auto s2 = oscillator_states(5, 2), s3 = oscillator_states(5, 3);
  bool ok = true;
  for (int n = 0; n <= 5; ++n) {
    for (auto& e : hamiltonian_residual(m2, false, Expr(2 * n), s2[n], {})) ok = ok && e.is_zero();
    for (auto& e : hamiltonian_residual(m3, false, Expr(2 * n), s3[n], {})) ok = ok && e.is_zero();
  }
  r.check("H- Psi_n = 2n (-N) Psi_n for n <= 5 (2x2 and 3x3)", ok);
  Expr a = Expr::param("a");
  auto si = shape_invariance(a * x, a);
  auto E = spectrum(si, 6);
  bool lad = true;
  for (int n = 0; n < 6; ++n) lad = lad && substitute(E[n], {{"a", Expr(1)}}) == Expr(2 * n);
  r.check("spectrum sum of R is 2n", lad);
  auto lit = apply_ops(m2.Adag, x, s2[0], {});
  note("printed 2x2 A+ gives Psi_1 only up to (0, lambda_0 psi_0); exact since lambda_0 = 0",
       lit[0] == s2[1][0] && lit[1] == s2[1][1]);
}

// ---- 8 ----
void applications(Run& r) {
  DerivationTable fk;
  fk.declare_free("kappa");
  auto fq = frenet_family(FrenetData{S("kappa"), -2 * I(), Route::Q, fk});
  r.check("Frenet Q: q = -1, tau = -2i, p = i kappa", fq.family.q == Expr(-1) && fq.family.p == I() * S("kappa"));
  DerivationTable fkt = fk;
  fkt.declare_free("tau");
  auto fs = frenet_family(FrenetData{S("kappa"), S("tau"), Route::S, fkt});
  Expr eta = I() * S("kappa") - S("tau");
  r.check("Frenet S: w = 2/(i kappa - tau), q = (kappa^2 + tau^2)/4",
          fs.family.w == 2 / eta && fs.family.q == (S("kappa").pow(2) + S("tau").pow(2)) / 4);
  DerivationTable rw;
  rw.declare_free("w1");
  auto rq = rigid_family(RigidData{S("w1"), 2 - I() * S("w1"), Route::Q, rw});
  r.check("rigid Q: q = omega2 - 1", rq.family.q == 2 - I() * S("w1") - 1 && rq.family.w == Expr(1));
  auto rs = rigid_family(RigidData{S("w1"), Z0(), Route::S, rw});
  r.check("rigid S: w = -2/omega1, q = omega1^2/4", rs.family.w == -2 / S("w1") && rs.family.q == S("w1").pow(2) / 4);

  // step-1 chain matrices
  auto cr = application_chain(rq, {S("theta0")}, 1, riccati_table(rq.family));
  Expr th = S("theta0"), nu = M() + th * th, h = Expr::rational(1, 2);
  Mat T1{{h * (-nu * nu + 2 * th * th - 1), h * I() * (nu * nu - 1), th * (1 - nu)},
         {h * I() * (nu * nu - 1), h * (nu * nu + 2 * th * th + 1), I() * th * (1 + nu)},
         {th * (nu - 1), -I() * th * (nu + 1), nu + th * th}};
  Mat L{{-M() * M(), th * M(), 1 - th * th}, {I() * M() * M(), -I() * th * M(), I() + I() * th * th}, {Z0(), -M(), 2 * th}};
  Mat R{{h, -h * I(), Z0()}, {-th, I() * th, Expr(-1)}, {h * (th * th - 1), -h * I() * (th * th + 1), th}};
  r.check("rigid T1 equals the printed matrix", cr.steps.at(0).T.G.P == T1);
  r.check("rigid T1 equals its printed factorization", L * R == T1);

  auto cf = application_chain(fs, {th}, 1, riccati_table(fs.family));
  auto& st = cf.steps.at(0);
  Expr rho = st.seed.rho, nuf = st.seed.nu;
  r.check("Frenet rho = -theta0 + eta'/eta, nu = m - theta0 rho",
          rho == -th + differentiate(eta, fs.family.table) / eta && nuf == M() - th * rho);
  auto t2 = [&](const Expr& e) {
    return h * Mat{{4 / (e * e) + rho * rho + th * th + nuf * nuf * e * e / 4, I() * (4 * th / e - nuf * rho * e),
                    I() * (4 / (e * e) + rho * rho - th * th - nuf * nuf * e * e / 4)},
                   {I() * (4 * rho / e - nuf * th * e), 2 * (nuf - rho * th), -4 * rho / e - nuf * th * e},
                   {I() * (4 / (e * e) - rho * rho + th * th - nuf * nuf * e * e / 4), -4 * th / e - nuf * rho * e,
                    rho * rho + th * th - 4 / (e * e) - nuf * nuf * e * e / 4}};
  };
  r.check("Frenet T2 equals the printed matrix with w -> 1/w", st.T.G.P == t2(4 / eta));
  Mat Pm = darboux_gauge(fs.family, st.seed).P.P;
  Mat D = Mat::diag({Expr(1), fs.family.w}), Dinv = Mat::diag({Expr(1), 1 / fs.family.w});
  note("printed Frenet T2 equals S Sym2(Delta^-1 P Delta) S^-1",
       t2(eta) == gauge_s().P * sym_group(Dinv * Pm * D, 2) * gauge_s().Pinv);

  // numeric sweeps on random samples
  double worst = 0;
  bool ok = true;
  for (const char* kind : {"frenet", "rigid"}) {
    for (const char* route : {"Q", "S"}) {
      json out = run_command("verify.numeric", {{"kind", kind}, {"route", route}, {"samples", 5}, {"seed", 20}});
      ok = ok && out["pass"].get<bool>() && out["checks"].size() == 5;
      for (auto& c : out["checks"]) worst = std::max(worst, c["max_residual"].get<double>());
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  r.check(std::string("residual sweeps <= 1e-8 on 5 samples per route (worst ") + buf + ")", ok);
}

// ---- 9 ----
void oracle_health(Run& r) {
  auto o = rk4_order_check();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", o.ratio);
  r.check(std::string("RK4 error ratio in [12, 20] (") + buf + ")", o.ratio >= 12 && o.ratio <= 20);
  auto a = rigid_family(RigidData{Z0(), Expr(2), Route::Q, {}});
  NumericInstance inst{{}, {{"m", 0.0}}};
  Interval iv;
  r.check("true Q passes the sweep", residual_sweep(a.Zfund, a.system, a.family, inst, iv) <= 1e-8);
  Mat Qbad = gauge_q().P;
  Qbad(1, 0) = -Qbad(1, 0);
  double bad = residual_sweep(a.family.w * Qbad * a.fundamental.Y, a.system, a.family, inst, iv);
  std::snprintf(buf, sizeof buf, "%.2e", bad);
  r.check(std::string("sign-flipped Q detected, residual >= 1e-2 (") + buf + ")", bad >= 1e-2);
}

}

int main() {
  struct Item {
    int id;
    const char* title;
    std::function<void(Run&)> fn;
  };
  std::vector<Item> items{
      {1, "Darboux covariance", darboux_covariance},
      {2, "gauge equivalence", gauge_equivalence},
      {3, "symmetric-power coherence", symmetric_powers},
      {4, "lifted Darboux transformations", lifted_transformations},
      {5, "first integrals", first_integrals},
      {6, "Riccati parametrization and linear form", theorem_two},
      {7, "SUSY oscillator", susy_oscillator},
      {8, "applications", applications},
      {9, "numerical oracle health", oracle_health},
  };
  int failed = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (auto& it : items) {
    Run r;
    std::string err;
    try {
      it.fn(r);
    } catch (const std::exception& e) {
      err = e.what();
    }
    bool pass = err.empty() && r.failed.empty();
    if (!pass) ++failed;
    std::printf("[%s] %d %s (%d/%d checks)\n", pass ? "PASS" : "FAIL", it.id, it.title,
                r.total - int(r.failed.size()), r.total);
    for (auto& f : r.failed) std::printf("       failed: %s\n", f.c_str());
    if (!err.empty()) std::printf("       error: %s\n", err.c_str());
  }
  for (auto& n : notes) std::printf("[NOTE] %s\n", n.c_str());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/%zu criteria passed in %.1f s\n", int(items.size()) - failed, items.size(), secs);
  return failed;
}
