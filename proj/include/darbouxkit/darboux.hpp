#pragma once

#include <string>
#include <vector>

#include "darbouxkit/linsys.hpp"

namespace darbouxkit {

// theta0 = y0'/y0 for a solution y0 of L_{m0} y = 0 (m0 = 0 unless shifted).
struct DarbouxSeed {
  Expr theta0;
  Expr m0;
  Expr sqrt_r;
  Expr rho; // -theta0 - p - r'/(2r)
  Expr nu;  // (m - m0) r - theta0 rho
  std::string y0 = "y0";
  DerivationTable table; // family table plus seed rules (y0' = theta0 y0)

  // checks the Riccati certificate theta0' = -(q - m0 r) - p theta0 - theta0^2
  static DarbouxSeed make(const SecondOrderFamily& f, const Expr& theta0, const DerivationTable& extra = {},
                          const Expr& m0 = Expr());
  // same, with m0 solved from the certificate; SeedNotSolution unless m0 is constant
  static DarbouxSeed infer(const SecondOrderFamily& f, const Expr& theta0, const DerivationTable& extra = {});
};

// theta0' + (q - m0 r) + p theta0 + theta0^2
Expr riccati_residual(const SecondOrderFamily& f, const Expr& theta0, const Expr& m0, const DerivationTable& t);
// rule theta' = -(q - m0 r) - p theta - theta^2 for a symbolic seed
DerivationTable riccati_table(const SecondOrderFamily& f, const std::string& theta = "theta0",
                              const Expr& m0 = Expr());

// q0 = 2 theta0' + rh' + p' - rh (rh + p + 2 theta0), rh = r'/(2r)
Expr darboux_q0(const SecondOrderFamily& f, const DarbouxSeed& s);
// y0 sqrt(r) (p/(y0 sqrt(r)) - (1/(y0 sqrt(r)))')' + m0 r
Expr darboux_q_compact(const SecondOrderFamily& f, const DarbouxSeed& s);
// family with q replaced by q + q0, cross-checked against the compact form
SecondOrderFamily darboux_potential(const SecondOrderFamily& f, const DarbouxSeed& s);

// (y' - theta0 y)/sqrt(r)
Expr darboux_solution(const Expr& y, const DarbouxSeed& s, const DerivationTable& t);
// u'' + p u' + (q - m r) u
Expr operator_residual(const SecondOrderFamily& f, const Expr& u, const DerivationTable& t);

// P = L R with P = (1/sqrt r)[[-theta0, 1], [nu, rho]], L = [[0,1],[(m-m0) r, rho]],
// R = (1/sqrt r)[[1,0],[-theta0,1]]. Orientation: Xt = P X, so the transformed
// companion system is transform(companion(f), P) = gauge(companion(f), P^-1).
struct DarbouxGauge {
  GaugeMatrix P;
  Mat L, R;
};
DarbouxGauge darboux_gauge(const SecondOrderFamily& f, const DarbouxSeed& s);

struct ChainStep {
  SecondOrderFamily family; // family after this step
  DarbouxSeed seed;         // seed used for this step
  Expr shift;               // q_i - q_0
  bool shape_invariant;     // shift is x-free
};

struct DarbouxChain {
  SecondOrderFamily base;
  std::vector<ChainStep> steps;
  const SecondOrderFamily& at(size_t i) const { return i == 0 ? base : steps[i - 1].family; }
};

// seed i is seeds[min(i, size-1)]; its m0 is inferred per step
DarbouxChain darboux_chain(const SecondOrderFamily& f, const std::vector<Expr>& seeds, int k,
                           const DerivationTable& extra = {});

}
