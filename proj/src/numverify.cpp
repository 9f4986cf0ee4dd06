#include <algorithm>
#include <cmath>

#include "darbouxkit/numverify.hpp"

namespace darbouxkit {

namespace {

Mat prepare(const Mat& A, const NumericInstance& inst, const DerivationTable& t) {
  return inst.subs.empty() ? A : substitute(A, inst.subs, t);
}

// dX = -A X
void rhs(const std::vector<cplx>& A, size_t n, size_t k, const std::vector<cplx>& X, std::vector<cplx>& out) {
  out.assign(n * k, 0.0);
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < n; ++l) {
      cplx a = A[i * n + l];
      if (a == 0.0) continue;
      for (size_t j = 0; j < k; ++j) out[i * k + j] -= a * X[l * k + j];
    }
}

std::vector<std::string> solution_slots() { return {"y1", "y1'", "y2", "y2'"}; }

// slot values at grid step from a 2x2 companion trajectory started at I
std::vector<cplx> slot_values(const Trajectory& sc, size_t step) {
  return {sc.at(step, 0, 0), sc.at(step, 1, 0), sc.at(step, 0, 1), sc.at(step, 1, 1)};
}

Trajectory scalar_trajectory(const SecondOrderFamily& f, const NumericInstance& inst, const Interval& iv) {
  return integrate(companion(f), inst, {{1.0, 0.0}, {0.0, 1.0}}, iv);
}

}

NumericMatrix::NumericMatrix(const Mat& A, const NumericInstance& inst, const DerivationTable& t,
                             const std::vector<std::string>& slots)
    : r_(A.rows()), c_(A.cols()) {
  Mat P = prepare(A, inst, t);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) e_.emplace_back(P(i, j), slots, inst.params);
}

void NumericMatrix::eval(double x, const cplx* slots, std::vector<cplx>& out) const {
  out.resize(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) out[i] = e_[i](x, slots);
}

Trajectory integrate(const LinearSystem& s, const NumericInstance& inst, const std::vector<std::vector<cplx>>& X0,
                     const Interval& iv) {
  if (!(iv.h > 0) || !(iv.b > iv.a)) throw Error(ErrorCode::InvalidArgument, "need h > 0 and b > a");
  size_t n = s.n();
  if (X0.size() != n) throw Error(ErrorCode::InvalidArgument, "initial state has the wrong dimension");
  size_t k = X0[0].size();
  NumericMatrix A(s.A, inst, s.table);
  Trajectory tr;
  tr.n = n;
  tr.k = k;
  std::vector<cplx> X(n * k);
  for (size_t i = 0; i < n; ++i) {
    if (X0[i].size() != k) throw Error(ErrorCode::InvalidArgument, "ragged initial matrix");
    for (size_t j = 0; j < k; ++j) X[i * k + j] = X0[i][j];
  }
  auto steps = static_cast<size_t>(std::llround((iv.b - iv.a) / iv.h));
  double h = (iv.b - iv.a) / static_cast<double>(steps);
  tr.xs.push_back(iv.a);
  tr.states.push_back(X);
  std::vector<cplx> a0, am, a1, k1, k2, k3, k4, tmp(n * k);
  A.eval(iv.a, nullptr, a0);
  for (size_t st = 0; st < steps; ++st) {
    double x = iv.a + h * static_cast<double>(st);
    A.eval(x + h / 2, nullptr, am);
    A.eval(x + h, nullptr, a1);
    rhs(a0, n, k, X, k1);
    for (size_t i = 0; i < X.size(); ++i) tmp[i] = X[i] + h / 2 * k1[i];
    rhs(am, n, k, tmp, k2);
    for (size_t i = 0; i < X.size(); ++i) tmp[i] = X[i] + h / 2 * k2[i];
    rhs(am, n, k, tmp, k3);
    for (size_t i = 0; i < X.size(); ++i) tmp[i] = X[i] + h * k3[i];
    rhs(a1, n, k, tmp, k4);
    for (size_t i = 0; i < X.size(); ++i) X[i] += h / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    a0.swap(a1);
    tr.xs.push_back(x + h);
    tr.states.push_back(X);
  }
  return tr;
}

double residual_sweep(const Mat& candidate, const LinearSystem& s, const SecondOrderFamily& scalar,
                      const NumericInstance& inst, const Interval& iv, int samples) {
  if (candidate.is_zero()) return 0.0;
  DerivationTable t = s.table;
  t.merge(solution_table(scalar));
  LinearSystem ss = s;
  ss.table = t;
  Mat R = residual(ss, candidate);
  NumericMatrix nr(R, inst, t, solution_slots());
  Trajectory sc = scalar_trajectory(scalar, inst, iv);
  size_t last = sc.xs.size() - 1;
  double worst = 0.0;
  std::vector<cplx> v;
  for (int q = 0; q < samples; ++q) {
    size_t step = samples == 1 ? 0 : last * static_cast<size_t>(q) / static_cast<size_t>(samples - 1);
    auto sl = slot_values(sc, step);
    nr.eval(sc.xs[step], sl.data(), v);
    for (auto& c : v) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

double trajectory_agreement(const Mat& candidate, const LinearSystem& s, const SecondOrderFamily& scalar,
                            const NumericInstance& inst, const Interval& iv) {
  DerivationTable t = s.table;
  t.merge(solution_table(scalar));
  NumericMatrix nc(candidate, inst, t, solution_slots());
  Trajectory sc = scalar_trajectory(scalar, inst, iv);
  std::vector<cplx> v;
  auto sl = slot_values(sc, 0);
  nc.eval(sc.xs[0], sl.data(), v);
  std::vector<std::vector<cplx>> Z0(candidate.rows(), std::vector<cplx>(candidate.cols()));
  for (size_t i = 0; i < candidate.rows(); ++i)
    for (size_t j = 0; j < candidate.cols(); ++j) Z0[i][j] = v[i * candidate.cols() + j];
  Trajectory tz = integrate(s, inst, Z0, iv);
  double worst = 0.0;
  for (size_t st = 0; st < tz.xs.size(); ++st) {
    sl = slot_values(sc, st);
    nc.eval(sc.xs[st], sl.data(), v);
    for (size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(v[i] - tz.states[st][i]));
  }
  return worst;
}

double drift(const Expr& F, const std::vector<std::string>& names, const Trajectory& tr, const NumericInstance& inst,
             size_t col) {
  if (names.size() != tr.n) throw Error(ErrorCode::InvalidArgument, "component count mismatch");
  Expr G = inst.subs.empty() ? F : substitute(F, inst.subs);
  NumericExpr ne(G, names, inst.params);
  std::vector<cplx> z(tr.n);
  auto value = [&](size_t st) {
    for (size_t i = 0; i < tr.n; ++i) z[i] = tr.at(st, i, col);
    return ne(tr.xs[st], z.data());
  };
  cplx f0 = value(0);
  double worst = 0.0;
  for (size_t st = 1; st < tr.xs.size(); ++st) worst = std::max(worst, std::abs(value(st) - f0));
  return worst;
}

OrderCheck rk4_order_check(double h) {
  LinearSystem s = LinearSystem::minus_a(Mat{{Expr(), Expr(-1)}, {Expr(1), Expr()}});
  auto err = [&](double hh) {
    Trajectory tr = integrate(s, {}, {{1.0}, {0.0}}, Interval{0.0, 1.0, hh});
    size_t e = tr.xs.size() - 1;
    return std::max(std::abs(tr.at(e, 0) - std::cos(1.0)), std::abs(tr.at(e, 1) + std::sin(1.0)));
  };
  OrderCheck o{err(h), err(h / 2), 0.0};
  o.ratio = o.err_h / o.err_h2;
  return o;
}

}
