#include "darbouxkit/linsys.hpp"

namespace darbouxkit {

LinearSystem LinearSystem::minus_a(const Mat& A, const DerivationTable& t) {
  if (!A.square()) throw Error(ErrorCode::InvalidArgument, "system matrix must be square");
  return LinearSystem{A, t, {}};
}

LinearSystem LinearSystem::plus_m(const Mat& M, const DerivationTable& t) {
  LinearSystem s = minus_a(-M, t);
  s.conversions.push_back("Yp=MY: A=-M");
  return s;
}

LinearSystem LinearSystem::cross(const Expr& f, const Expr& g, const Expr& h, const DerivationTable& t) {
  LinearSystem s = minus_a(-skew(f, g, h), t);
  s.conversions.push_back("Zp=ZxOmega: A=-skew(f,g,h)");
  return s;
}

SecondOrderFamily SecondOrderFamily::make(const Expr& p, const Expr& q, const Expr& r, const Expr& w,
                                          const DerivationTable& table, const std::string& m) {
  if (r.is_zero()) throw Error(ErrorCode::InvalidArgument, "r must be nonzero");
  if (w.is_zero()) throw Error(ErrorCode::InvalidArgument, "w must be nonzero");
  Expr d = p - differentiate(w, table) / w;
  if (!d.is_zero())
    throw Error(ErrorCode::InvalidArgument, "p - w'/w does not normalize to zero", d.sexpr());
  return SecondOrderFamily{p, q, r, w, m, table};
}

GaugeMatrix GaugeMatrix::make(const Mat& P) {
  if (!P.square()) throw Error(ErrorCode::InvalidArgument, "gauge matrix must be square");
  Expr d = P.det();
  if (d.is_zero()) throw Error(ErrorCode::SingularGauge, "gauge determinant normalizes to zero");
  return GaugeMatrix{P, P.adjugate() / d};
}

GaugeMatrix GaugeMatrix::make(const Mat& P, const Mat& Pinv) {
  if (P * Pinv != Mat::identity(P.rows()))
    throw Error(ErrorCode::SingularGauge, "supplied inverse does not invert the gauge matrix");
  return GaugeMatrix{P, Pinv};
}

Mat companion_a0(const SecondOrderFamily& f) { return Mat{{Expr(), Expr(-1)}, {f.q, f.p}}; }
Mat companion_n(const SecondOrderFamily& f) { return Mat{{Expr(), Expr()}, {-f.r, Expr()}}; }

LinearSystem companion(const SecondOrderFamily& f) {
  return LinearSystem::minus_a(companion_a0(f) + f.mpar() * companion_n(f), f.table);
}

LinearSystem gauge(const LinearSystem& s, const GaugeMatrix& P) {
  if (P.P.rows() != s.n()) throw Error(ErrorCode::InvalidArgument, "gauge size mismatch");
  Mat B = P.Pinv * s.A * P.P + P.Pinv * differentiate(P.P, s.table);
  return LinearSystem{B, s.table, s.conversions};
}

LinearSystem transform(const LinearSystem& s, const GaugeMatrix& T) {
  return gauge(s, GaugeMatrix{T.Pinv, T.P});
}

Mat residual(const LinearSystem& s, const Mat& candidate) {
  if (candidate.rows() != s.n()) throw Error(ErrorCode::InvalidArgument, "candidate size mismatch");
  return differentiate(candidate, s.table) + s.A * candidate;
}

DerivationTable solution_table(const SecondOrderFamily& f, const std::vector<std::string>& ys) {
  DerivationTable t = f.table;
  for (auto& y : ys) t.add_second_order(y, f.p, f.potential());
  return t;
}

Mat companion_fundamental(const std::string& y1, const std::string& y2) {
  return Mat{{Expr::symbol(y1), Expr::symbol(y2)}, {Expr::symbol(y1, 1), Expr::symbol(y2, 1)}};
}

}
