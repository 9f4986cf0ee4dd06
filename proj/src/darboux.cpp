#include "darbouxkit/darboux.hpp"

namespace darbouxkit {

Expr riccati_residual(const SecondOrderFamily& f, const Expr& theta0, const Expr& m0, const DerivationTable& t) {
  return differentiate(theta0, t) + (f.q - m0 * f.r) + f.p * theta0 + theta0 * theta0;
}

DerivationTable riccati_table(const SecondOrderFamily& f, const std::string& theta, const Expr& m0) {
  DerivationTable t;
  Expr th = Expr::symbol(theta);
  t.set(theta, 0, -(f.q - m0 * f.r) - f.p * th - th * th);
  return t;
}

namespace {

DarbouxSeed build(const SecondOrderFamily& f, const Expr& theta0, DerivationTable t, const Expr& m0) {
  DarbouxSeed s;
  s.theta0 = theta0;
  s.m0 = m0;
  s.table = std::move(t);
  s.table.set(s.y0, 0, theta0 * Expr::symbol(s.y0));
  s.sqrt_r = Expr::sqrt(f.r);
  Expr dr = differentiate(f.r, s.table);
  s.rho = -theta0 - f.p - dr / (2 * f.r);
  s.nu = (f.mpar() - m0) * f.r - theta0 * s.rho;
  return s;
}

}

DarbouxSeed DarbouxSeed::make(const SecondOrderFamily& f, const Expr& theta0, const DerivationTable& extra,
                              const Expr& m0) {
  DerivationTable t = f.table;
  t.merge(extra);
  Expr res = riccati_residual(f, theta0, m0, t);
  if (!res.is_zero())
    throw Error(ErrorCode::SeedNotSolution, "theta0 = " + theta0.infix() + " fails the Riccati certificate",
                res.infix());
  return build(f, theta0, std::move(t), m0);
}

DarbouxSeed DarbouxSeed::infer(const SecondOrderFamily& f, const Expr& theta0, const DerivationTable& extra) {
  DerivationTable t = f.table;
  t.merge(extra);
  Expr m0 = riccati_residual(f, theta0, Expr(), t) / f.r;
  if (!m0.is_constant() || m0.depends_on_x())
    throw Error(ErrorCode::SeedNotSolution,
                "theta0 = " + theta0.infix() + " is not a log-derivative of a solution at any constant m",
                m0.infix());
  return build(f, theta0, std::move(t), m0);
}

Expr darboux_q0(const SecondOrderFamily& f, const DarbouxSeed& s) {
  const DerivationTable& t = s.table;
  Expr rh = differentiate(f.r, t) / (2 * f.r);
  return 2 * differentiate(s.theta0, t) + differentiate(rh, t) + differentiate(f.p, t) -
         rh * (rh + f.p + 2 * s.theta0);
}

Expr darboux_q_compact(const SecondOrderFamily& f, const DarbouxSeed& s) {
  const DerivationTable& t = s.table;
  Expr g = Expr::symbol(s.y0) * s.sqrt_r;
  Expr u = g.inverse();
  Expr inner = f.p * u - differentiate(u, t);
  return g * differentiate(inner, t) + s.m0 * f.r;
}

SecondOrderFamily darboux_potential(const SecondOrderFamily& f, const DarbouxSeed& s) {
  Expr qt = f.q + darboux_q0(f, s);
  Expr c = darboux_q_compact(f, s);
  if (qt != c)
    throw Error(ErrorCode::Internal, "q0 formula and compact formula disagree", (qt - c).infix());
  SecondOrderFamily g = f;
  g.q = qt;
  g.table = s.table;
  return g;
}

Expr darboux_solution(const Expr& y, const DarbouxSeed& s, const DerivationTable& t) {
  return (differentiate(y, t) - s.theta0 * y) / s.sqrt_r;
}

Expr operator_residual(const SecondOrderFamily& f, const Expr& u, const DerivationTable& t) {
  Expr d1 = differentiate(u, t);
  return differentiate(d1, t) + f.p * d1 + f.potential() * u;
}

DarbouxGauge darboux_gauge(const SecondOrderFamily& f, const DarbouxSeed& s) {
  Expr is = s.sqrt_r.inverse();
  Mat P = is * Mat{{-s.theta0, Expr(1)}, {s.nu, s.rho}};
  Mat L{{Expr(), Expr(1)}, {(f.mpar() - s.m0) * f.r, s.rho}};
  Mat R = is * Mat{{Expr(1), Expr()}, {-s.theta0, Expr(1)}};
  return DarbouxGauge{GaugeMatrix::make(P), L, R};
}

DarbouxChain darboux_chain(const SecondOrderFamily& f, const std::vector<Expr>& seeds, int k,
                           const DerivationTable& extra) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "chain length must be >= 0");
  if (k > 0 && seeds.empty()) throw Error(ErrorCode::InvalidArgument, "chain needs at least one seed");
  DarbouxChain c{f, {}};
  SecondOrderFamily cur = f;
  for (int i = 0; i < k; ++i) {
    const Expr& th = seeds[std::min<size_t>(static_cast<size_t>(i), seeds.size() - 1)];
    DarbouxSeed s;
    try {
      s = DarbouxSeed::infer(cur, th, extra);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i) + ": " + e.what(), e.detail(), i);
    }
    SecondOrderFamily next = darboux_potential(cur, s);
    Expr shift = next.q - f.q;
    c.steps.push_back(ChainStep{next, s, shift, !shift.depends_on_x()});
    cur = next;
  }
  return c;
}

}
