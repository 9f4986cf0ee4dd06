#pragma once

#include <string>

#include "darbouxkit/darboux.hpp"
#include "darbouxkit/sympow.hpp"

namespace darbouxkit {

// Z' = skew(f, g, h) Z = Z x Omega, Omega = (f, g, h)
struct OrthogonalSystem {
  Expr f, g, h;
  DerivationTable table;
  Mat matrix() const { return skew(f, g, h); }
  LinearSystem system() const { return LinearSystem::cross(f, g, h, table); }
};

// Q = [[1,0,-1],[i,0,i],[0,-1,0]], S = [[1,0,1],[0,i,0],[i,0,-i]]
const GaugeMatrix& gauge_q();
const GaugeMatrix& gauge_s();
// diag(1, w)
GaugeMatrix gauge_delta(const SecondOrderFamily& f);

// C = 1/2 [[i h, g + i f], [-(g - i f), -i h]]; NotTraceless
OrthogonalSystem so3_from_sym2(const Mat& C);
Mat sym2_from_so3(const Expr& f, const Expr& g, const Expr& h);
// Q sym2(C) Q^-1 - skew(f, g, h) for symbolic entries; checked once per process
void check_q_lemma();

// Z = w Q Sym2(X): Omega = (i(q - m r - 1), q - m r + 1, -i p)
OrthogonalSystem omega_q_route(const SecondOrderFamily& f);
// Z1 = S Sym2(Delta X): Omega = (-(1/w + w(q - m r)), 0, -i(1/w - w(q - m r)))
OrthogonalSystem omega_s_route(const SecondOrderFamily& f);

// the systems as built by gauge changes from the companion system
LinearSystem sym2_system(const SecondOrderFamily& f);    // Y' = -(S2 + m N2) Y
LinearSystem sl2_system(const SecondOrderFamily& f);     // X1' = -(B0 + m N1) X1
LinearSystem sym2_sl2_system(const SecondOrderFamily& f); // Y1' = -(S2^ + m N2^) Y1
LinearSystem so3_q_system(const SecondOrderFamily& f);   // Z' = -(Omega0 + m N3) Z
LinearSystem so3_s_system(const SecondOrderFamily& f);   // Z1' = -(Omega0^ + m N3^) Z1

// lifted Darboux gauges with their m-dependent x seed-only factorization: P = left * right
struct LiftedGauge {
  GaugeMatrix G;
  Mat left, right;
};
LiftedGauge lift_p1(const SecondOrderFamily& f, const DarbouxSeed& s); // Sym2(P_m)
LiftedGauge lift_p2(const SecondOrderFamily& f, const DarbouxSeed& s); // Sym2(Delta P_m Delta^-1)
LiftedGauge lift_t1(const SecondOrderFamily& f, const DarbouxSeed& s); // Q P1 Q^-1
LiftedGauge lift_t2(const SecondOrderFamily& f, const DarbouxSeed& s); // S P2 S^-1

// closed forms in theta0, rho, nu, w, r
Mat p1_explicit(const SecondOrderFamily& f, const DarbouxSeed& s);
Mat p2_explicit(const SecondOrderFamily& f, const DarbouxSeed& s);
Mat t1_explicit(const SecondOrderFamily& f, const DarbouxSeed& s);
Mat t2_explicit(const SecondOrderFamily& f, const DarbouxSeed& s);

struct FundamentalMatrices {
  Mat X, Y, Z, X1, Y1, Z1;
  DerivationTable table; // family table with y1, y2 solution rules
};
FundamentalMatrices fundamental_matrices(const SecondOrderFamily& f, const std::string& y1 = "y1",
                                         const std::string& y2 = "y2");

enum class IntegralKind { Orthogonal, Sym2 };
// alpha^2 + beta^2 + gamma^2 in symbols (alpha, beta, gamma), or
// w^2 (4 z1 z3 - z2^2) in symbols (z1, z2, z3)
Expr first_integral(IntegralKind k, const Expr& w = Expr(1));
// d/dx of F along Z' = -A Z, with the components as the given symbols
Expr flow_derivative(const Expr& F, const std::vector<std::string>& names, const LinearSystem& s);

// theta' = omega0 + mu theta + omega1 theta^2 and
// y'' - (mu + omega1'/omega1) y' + omega0 omega1 y = 0
struct RiccatiForm {
  Expr omega0, omega1, mu;
  Expr lin_p, lin_c; // y'' + lin_p y' + lin_c y = 0
};
// linear form needs omega1 != 0: OmegaOneZero
RiccatiForm so3_to_riccati(const OrthogonalSystem& sys, bool linear = true);
// ((1 - uv)/(u - v), i(1 + uv)/(u - v), (u + v)/(u - v))
std::vector<Expr> riccati_parametrize(const Expr& u, const Expr& v);
// u = (alpha + i beta)/(1 - gamma); NotUnitNorm unless alpha^2 + beta^2 + gamma^2 = 1
Expr riccati_invert(const Expr& alpha, const Expr& beta, const Expr& gamma);

// coefficient of the family parameter in an affine-in-m matrix
Mat m_coefficient(const Mat& A, const std::string& m = "m");

}
