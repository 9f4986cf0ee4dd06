#pragma once

#include <string>
#include <vector>

#include "darbouxkit/darboux.hpp"

namespace darbouxkit {

// V- = W^2 - W', V+ = W^2 + W'
struct SusyPair {
  Expr W, Vminus, Vplus;
  Expr lambda0; // ground-state energy of H-, zero unless shifted
};

// W = -theta0
Expr superpotential(const Expr& theta0);
SusyPair partner_potentials(const Expr& W, const DerivationTable& t = {});

// Scalar ladders A = d + W and A+ = -d + W
Expr ladder_down(const Expr& W, const Expr& psi, const DerivationTable& t);
Expr ladder_up(const Expr& W, const Expr& psi, const DerivationTable& t);

// Entry of an operator matrix: coeff * op(component) + mult * component
enum class LadderOp { Id, Down, Up };
struct OpEntry {
  Expr coeff;
  LadderOp op = LadderOp::Id;
  Expr mult;
};
using OpMatrix = std::vector<std::vector<OpEntry>>;

struct MatrixFormalism {
  int order = 2;
  Mat Vminus, Vplus; // [[0,1],[V,0]] or [[0,1,0],[2V,0,2],[0,V,0]]
  Mat minusN;        // [[0,0],[1,0]] or [[0,0,0],[2,0,0],[0,1,0]]
  OpMatrix A, Adag;  // ladder matrices as printed
  Expr W;
};
// UnsupportedOrder unless order is 2 or 3
MatrixFormalism matrix_formalism(const SusyPair& pair, int order, const DerivationTable& t = {});
std::vector<Expr> apply_ops(const OpMatrix& M, const Expr& W, const std::vector<Expr>& psi, const DerivationTable& t);
// Darboux matrix for r = 1, p = 0, theta0 = -W, m = -lambda
Mat susy_darboux_matrix(const Expr& W, const Expr& lambda, int order);
// lambda-block x W-block
std::pair<Mat, Mat> susy_darboux_factors(const Expr& W, const Expr& lambda, int order);
// -Psi' + V Psi - lambda (-N) Psi
std::vector<Expr> hamiltonian_residual(const MatrixFormalism& mf, bool plus, const Expr& lambda,
                                       const std::vector<Expr>& psi, const DerivationTable& t);

// W(x; a) with reparametrization a1 = f(a): R = V+(x; a) - V-(x; f(a)) if x-free
struct ShapeInvariance {
  Expr R;  // in terms of a
  Expr f;  // a1 as a function of a
  std::string a = "a";
};
// NotShapeInvariant carrying the x-dependent residual
ShapeInvariance shape_invariance(const Expr& W, const Expr& f, const std::string& a = "a");
// E_n = sum_{k<n} R(a_k), a_0 = a, a_{k+1} = f(a_k)
std::vector<Expr> spectrum(const ShapeInvariance& s, int n);

// psi_n = (A+)^n exp(-x^2/2) with W = x, lifted to (psi, psi') or (psi^2, 2 psi psi', psi'^2)
std::vector<std::vector<Expr>> oscillator_states(int n, int order = 2);

}
