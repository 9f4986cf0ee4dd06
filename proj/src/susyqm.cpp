#include "darbouxkit/susyqm.hpp"
#include "darbouxkit/sympow.hpp"

namespace darbouxkit {

Expr superpotential(const Expr& theta0) { return -theta0; }

SusyPair partner_potentials(const Expr& W, const DerivationTable& t) {
  Expr d = differentiate(W, t);
  return SusyPair{W, W * W - d, W * W + d, Expr()};
}

Expr ladder_down(const Expr& W, const Expr& psi, const DerivationTable& t) { return differentiate(psi, t) + W * psi; }

Expr ladder_up(const Expr& W, const Expr& psi, const DerivationTable& t) { return -differentiate(psi, t) + W * psi; }

namespace {

void check_order(int order) {
  if (order != 2 && order != 3)
    throw Error(ErrorCode::UnsupportedOrder, "matrix formalism exists for orders 2 and 3, got " + std::to_string(order));
}

Mat vmat(const Expr& V, int order) {
  if (order == 2) return Mat{{Expr(), Expr(1)}, {V, Expr()}};
  return Mat{{Expr(), Expr(1), Expr()}, {2 * V, Expr(), Expr(2)}, {Expr(), V, Expr()}};
}

Mat minus_n(int order) {
  if (order == 2) return Mat{{Expr(), Expr()}, {Expr(1), Expr()}};
  return Mat{{Expr(), Expr(), Expr()}, {Expr(2), Expr(), Expr()}, {Expr(), Expr(1), Expr()}};
}

}

MatrixFormalism matrix_formalism(const SusyPair& pair, int order, const DerivationTable& t) {
  check_order(order);
  MatrixFormalism mf;
  mf.order = order;
  mf.W = pair.W;
  mf.Vminus = vmat(pair.Vminus, order);
  mf.Vplus = vmat(pair.Vplus, order);
  mf.minusN = minus_n(order);
  const Expr& W = pair.W;
  auto e = [](const Expr& c, LadderOp op = LadderOp::Id, const Expr& mult = Expr()) { return OpEntry{c, op, mult}; };
  OpEntry z = e(Expr());
  const auto D = LadderOp::Down, U = LadderOp::Up;
  if (order == 2) {
    Expr dW = differentiate(W, t);
    mf.A = {{e(Expr(1), D), z}, {e(W, D), z}};
    mf.Adag = {{e(Expr(1), U), z}, {e(-W, U, 2 * dW), z}};
  } else {
    Expr W2 = W * W, W3 = W2 * W;
    mf.A = {{e(W, D), z, e(Expr(1))}, {e(2 * W2, D), z, e(2 * W)}, {e(W3, D), z, e(W2)}};
    mf.Adag = {{e(W, U), z, e(Expr(1))}, {e(-2 * W2, U), z, e(-2 * W)}, {e(W3, U), z, e(W2)}};
  }
  return mf;
}

std::vector<Expr> apply_ops(const OpMatrix& M, const Expr& W, const std::vector<Expr>& psi, const DerivationTable& t) {
  std::vector<Expr> out;
  for (auto& row : M) {
    Expr s;
    if (row.size() != psi.size()) throw Error(ErrorCode::InvalidArgument, "state size mismatch");
    for (size_t j = 0; j < row.size(); ++j) {
      const Expr& c = psi[j];
      switch (row[j].op) {
        case LadderOp::Id: s += row[j].coeff * c; break;
        case LadderOp::Down: s += row[j].coeff * ladder_down(W, c, t); break;
        case LadderOp::Up: s += row[j].coeff * ladder_up(W, c, t); break;
      }
      s += row[j].mult * c;
    }
    out.push_back(s);
  }
  return out;
}

std::pair<Mat, Mat> susy_darboux_factors(const Expr& W, const Expr& lambda, int order) {
  check_order(order);
  Mat L{{Expr(), Expr(1)}, {-lambda, W}};
  Mat R{{Expr(1), Expr()}, {W, Expr(1)}};
  if (order == 2) return {L, R};
  return {sym_group(L, 2), sym_group(R, 2)};
}

Mat susy_darboux_matrix(const Expr& W, const Expr& lambda, int order) {
  auto [L, R] = susy_darboux_factors(W, lambda, order);
  return L * R;
}

std::vector<Expr> hamiltonian_residual(const MatrixFormalism& mf, bool plus, const Expr& lambda,
                                       const std::vector<Expr>& psi, const DerivationTable& t) {
  Mat P = Mat::column(psi);
  Mat r = -differentiate(P, t) + (plus ? mf.Vplus : mf.Vminus) * P - lambda * (mf.minusN * P);
  return r.col(0);
}

ShapeInvariance shape_invariance(const Expr& W, const Expr& f, const std::string& a) {
  SusyPair p = partner_potentials(W);
  Expr vm1 = substitute(p.Vminus, {{a, f}});
  Expr R = p.Vplus - vm1;
  if (R.depends_on_x())
    throw Error(ErrorCode::NotShapeInvariant, "V+(x;a) - V-(x;f(a)) depends on x", R.infix());
  return ShapeInvariance{R, f, a};
}

std::vector<Expr> spectrum(const ShapeInvariance& s, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative level count");
  std::vector<Expr> E{Expr()};
  Expr ak = Expr::param(s.a), acc;
  for (int k = 1; k < n; ++k) {
    acc += substitute(s.R, {{s.a, ak}});
    E.push_back(acc);
    ak = substitute(s.f, {{s.a, ak}});
  }
  if (n == 0) E.clear();
  return E;
}

std::vector<std::vector<Expr>> oscillator_states(int n, int order) {
  check_order(order);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative state index");
  DerivationTable t;
  Expr x = Expr::x();
  Expr psi = Expr::exp(-x * x / 2);
  std::vector<std::vector<Expr>> out;
  for (int k = 0; k <= n; ++k) {
    Expr d = differentiate(psi, t);
    if (order == 2) out.push_back({psi, d});
    else out.push_back({psi * psi, 2 * psi * d, d * d});
    psi = ladder_up(x, psi, t);
  }
  return out;
}

}
