#pragma once

#include <array>
#include <vector>

#include "darbouxkit/linsys.hpp"

namespace darbouxkit {

// Degree-m monomials in X1..Xn ordered X1^m, X1^(m-1) X2, ..., Xn^m.
std::vector<std::vector<int>> monomial_basis(size_t n, int m);

// Group sense: matrix of v_P -> v_{P(M^T X)} on monomial coefficients.
Mat sym_group(const Mat& M, int m);
// Lie sense: matrix of v_P -> v_{D_M P}, D_M = sum_j (sum_i M_ij X_i) d/dX_j.
Mat sym_lie(const Mat& M, int m);

// Solution vectors live in coefficient coordinates of (v . X)^m, which carry
// multinomial weights: for n = m = 2 a vector (y, y') lifts to (y^2, 2 y y', y'^2).
std::vector<Expr> multinomial_weights(size_t n, int m);
std::vector<Expr> sym_vector(const std::vector<Expr>& v, int m);

// Coefficients (a2, a1, a0) of d^3 + a2 d^2 + a1 d + a0, annihilating products
// of solutions of y'' + p y' + c y = 0 (c = q for the family at m = 0).
struct ThirdOrderOperator {
  Expr a2, a1, a0;
};
ThirdOrderOperator sym2_operator(const Expr& p, const Expr& c, const DerivationTable& t);
ThirdOrderOperator sym2_operator(const SecondOrderFamily& f);
Expr apply_operator(const ThirdOrderOperator& L, const Expr& u, const DerivationTable& t);

// X' = -A X  ==>  Sym^m(X)' = -sym_lie(A, m) Sym^m(X)
LinearSystem sym_system(const LinearSystem& s, int m);

}
