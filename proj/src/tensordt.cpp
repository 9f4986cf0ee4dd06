#include <mutex>

#include "darbouxkit/tensordt.hpp"

namespace darbouxkit {

namespace {

Expr I() { return Expr::imag(); }

// Sym2 of the seed-only factor without its 1/sqrt(r)
Mat r_bare(const DarbouxSeed& s) { return Mat{{Expr(1), Expr()}, {-s.theta0, Expr(1)}}; }

Mat l_block(const SecondOrderFamily& f, const DarbouxSeed& s) {
  return Mat{{Expr(), Expr(1)}, {(f.mpar() - s.m0) * f.r, s.rho}};
}

}

const GaugeMatrix& gauge_q() {
  static const GaugeMatrix q = GaugeMatrix::make(
      Mat{{Expr(1), Expr(), Expr(-1)}, {I(), Expr(), I()}, {Expr(), Expr(-1), Expr()}});
  return q;
}

const GaugeMatrix& gauge_s() {
  static const GaugeMatrix s =
      GaugeMatrix::make(Mat{{Expr(1), Expr(), Expr(1)}, {Expr(), I(), Expr()}, {I(), Expr(), -I()}});
  return s;
}

GaugeMatrix gauge_delta(const SecondOrderFamily& f) {
  return GaugeMatrix{Mat::diag({Expr(1), f.w}), Mat::diag({Expr(1), f.w.inverse()})};
}

Mat sym2_from_so3(const Expr& f, const Expr& g, const Expr& h) {
  Expr half = Expr::rational(1, 2);
  return half * Mat{{I() * h, g + I() * f}, {-(g - I() * f), -I() * h}};
}

OrthogonalSystem so3_from_sym2(const Mat& C) {
  if (C.rows() != 2 || !C.square()) throw Error(ErrorCode::InvalidArgument, "expected a 2x2 matrix");
  if (!C.trace().is_zero()) throw Error(ErrorCode::NotTraceless, "trace does not vanish", C.trace().infix());
  check_q_lemma();
  OrthogonalSystem o;
  o.h = -2 * I() * C(0, 0);
  o.g = C(0, 1) - C(1, 0);
  o.f = -I() * (C(0, 1) + C(1, 0));
  return o;
}

void check_q_lemma() {
  static std::once_flag once;
  std::call_once(once, [] {
    Expr f = Expr::symbol("f"), g = Expr::symbol("g"), h = Expr::symbol("h");
    const GaugeMatrix& Q = gauge_q();
    Mat d = Q.P * sym_lie(sym2_from_so3(f, g, h), 2) * Q.Pinv - skew(f, g, h);
    if (!d.is_zero()) throw Error(ErrorCode::Internal, "Q-conjugation identity does not hold");
  });
}

OrthogonalSystem omega_q_route(const SecondOrderFamily& f) {
  Expr c = f.potential();
  return OrthogonalSystem{I() * (c - 1), c + 1, -I() * f.p, f.table};
}

OrthogonalSystem omega_s_route(const SecondOrderFamily& f) {
  Expr c = f.potential(), iw = f.w.inverse();
  return OrthogonalSystem{-(iw + f.w * c), Expr(), -I() * (iw - f.w * c), f.table};
}

LinearSystem sym2_system(const SecondOrderFamily& f) { return sym_system(companion(f), 2); }

LinearSystem sl2_system(const SecondOrderFamily& f) { return transform(companion(f), gauge_delta(f)); }

LinearSystem sym2_sl2_system(const SecondOrderFamily& f) { return sym_system(sl2_system(f), 2); }

LinearSystem so3_q_system(const SecondOrderFamily& f) {
  const GaugeMatrix& Q = gauge_q();
  GaugeMatrix wQ{f.w * Q.P, f.w.inverse() * Q.Pinv};
  return transform(sym2_system(f), wQ);
}

LinearSystem so3_s_system(const SecondOrderFamily& f) { return transform(sym2_sl2_system(f), gauge_s()); }

LiftedGauge lift_p1(const SecondOrderFamily& f, const DarbouxSeed& s) {
  auto D = darboux_gauge(f, s);
  GaugeMatrix G{sym_group(D.P.P, 2), sym_group(D.P.Pinv, 2)};
  return LiftedGauge{G, sym_group(l_block(f, s), 2) / f.r, sym_group(r_bare(s), 2)};
}

LiftedGauge lift_p2(const SecondOrderFamily& f, const DarbouxSeed& s) {
  auto D = darboux_gauge(f, s);
  GaugeMatrix dl = gauge_delta(f);
  GaugeMatrix G{sym_group(dl.P * D.P.P * dl.Pinv, 2), sym_group(dl.P * D.P.Pinv * dl.Pinv, 2)};
  return LiftedGauge{G, sym_group(dl.P * l_block(f, s), 2) / f.r, sym_group(r_bare(s) * dl.Pinv, 2)};
}

namespace {

LiftedGauge conj(const GaugeMatrix& C, const LiftedGauge& p) {
  return LiftedGauge{GaugeMatrix{C.P * p.G.P * C.Pinv, C.P * p.G.Pinv * C.Pinv}, C.P * p.left,
                     p.right * C.Pinv};
}

}

LiftedGauge lift_t1(const SecondOrderFamily& f, const DarbouxSeed& s) { return conj(gauge_q(), lift_p1(f, s)); }

LiftedGauge lift_t2(const SecondOrderFamily& f, const DarbouxSeed& s) { return conj(gauge_s(), lift_p2(f, s)); }

Mat p1_explicit(const SecondOrderFamily& f, const DarbouxSeed& s) {
  const Expr &th = s.theta0, &rho = s.rho, &nu = s.nu;
  return Mat{{th * th, -th, Expr(1)}, {-2 * th * nu, nu - th * rho, 2 * rho}, {nu * nu, rho * nu, rho * rho}} /
         f.r;
}

Mat p2_explicit(const SecondOrderFamily& f, const DarbouxSeed& s) {
  const Expr &th = s.theta0, &rho = s.rho, &nu = s.nu, &w = f.w;
  Expr iw = w.inverse();
  return Mat{{th * th, -th * iw, iw * iw},
             {-2 * nu * th * w, nu - rho * th, 2 * rho * iw},
             {nu * nu * w * w, nu * rho * w, rho * rho}} /
         f.r;
}

Mat t1_explicit(const SecondOrderFamily& f, const DarbouxSeed& s) {
  const Expr &th = s.theta0, &rho = s.rho, &nu = s.nu;
  Expr n2 = nu * nu, r2 = rho * rho, t2 = th * th, i = I();
  Mat T{{-n2 + r2 + t2 - 1, i * (n2 + r2 - t2 - 1), 2 * (nu * rho + th)},
        {i * (n2 - r2 + t2 - 1), n2 + r2 + t2 + 1, 2 * i * (th - nu * rho)},
        {2 * (nu * th + rho), -2 * i * (nu * th - rho), 2 * (nu - th * rho)}};
  return T / (2 * f.r);
}

Mat t2_explicit(const SecondOrderFamily& f, const DarbouxSeed& s) {
  const Expr &th = s.theta0, &rho = s.rho, &nu = s.nu;
  Expr v = f.w.inverse(), iv = f.w; // the closed form is written in 1/w
  Expr v2 = v * v, n2 = nu * nu * iv * iv, r2 = rho * rho, t2 = th * th, i = I();
  Mat T{{v2 + r2 + t2 + n2, 2 * i * (v * th - nu * rho * iv), i * (v2 + r2 - t2 - n2)},
        {2 * i * (v * rho - nu * th * iv), 2 * (nu - rho * th), -2 * (v * rho + nu * th * iv)},
        {i * (v2 - r2 + t2 - n2), -2 * (v * th + nu * rho * iv), -v2 + r2 + t2 - n2}};
  return T / (2 * f.r);
}

FundamentalMatrices fundamental_matrices(const SecondOrderFamily& f, const std::string& y1, const std::string& y2) {
  FundamentalMatrices m;
  m.table = solution_table(f, {y1, y2});
  m.X = companion_fundamental(y1, y2);
  m.Y = sym_group(m.X, 2);
  m.Z = f.w * gauge_q().P * m.Y;
  m.X1 = gauge_delta(f).P * m.X;
  m.Y1 = sym_group(m.X1, 2);
  m.Z1 = gauge_s().P * m.Y1;
  return m;
}

Expr first_integral(IntegralKind k, const Expr& w) {
  if (k == IntegralKind::Orthogonal) {
    Expr a = Expr::symbol("alpha"), b = Expr::symbol("beta"), c = Expr::symbol("gamma");
    return a * a + b * b + c * c;
  }
  Expr z1 = Expr::symbol("z1"), z2 = Expr::symbol("z2"), z3 = Expr::symbol("z3");
  return w * w * (4 * z1 * z3 - z2 * z2);
}

Expr flow_derivative(const Expr& F, const std::vector<std::string>& names, const LinearSystem& s) {
  if (names.size() != s.n()) throw Error(ErrorCode::InvalidArgument, "component count mismatch");
  std::vector<Expr> z;
  for (auto& n : names) z.push_back(Expr::symbol(n));
  Mat dz = -(s.A * Mat::column(z));
  DerivationTable t = s.table;
  for (size_t i = 0; i < names.size(); ++i) t.set(names[i], 0, dz(i, 0));
  return differentiate(F, t);
}

RiccatiForm so3_to_riccati(const OrthogonalSystem& sys, bool linear) {
  RiccatiForm r;
  Expr half = Expr::rational(1, 2);
  r.omega0 = half * (sys.g - I() * sys.f);
  r.omega1 = half * (sys.g + I() * sys.f);
  r.mu = -I() * sys.h;
  if (!linear) return r;
  if (r.omega1.is_zero()) throw Error(ErrorCode::OmegaOneZero, "g + i f normalizes to zero");
  r.lin_p = -(r.mu + differentiate(r.omega1, sys.table) / r.omega1);
  r.lin_c = r.omega0 * r.omega1;
  return r;
}

std::vector<Expr> riccati_parametrize(const Expr& u, const Expr& v) {
  Expr d = (u - v).inverse();
  return {(1 - u * v) * d, I() * (1 + u * v) * d, (u + v) * d};
}

Expr riccati_invert(const Expr& alpha, const Expr& beta, const Expr& gamma) {
  Expr n = alpha * alpha + beta * beta + gamma * gamma - 1;
  if (!n.is_zero()) throw Error(ErrorCode::NotUnitNorm, "alpha^2 + beta^2 + gamma^2 != 1", n.infix());
  Expr d = 1 - gamma;
  if (d.is_zero()) throw Error(ErrorCode::NotUnitNorm, "gamma = 1 has no finite preimage");
  return (alpha + I() * beta) / d;
}

Mat m_coefficient(const Mat& A, const std::string& m) {
  return substitute(A, {{m, Expr(1)}}) - substitute(A, {{m, Expr()}});
}

}
