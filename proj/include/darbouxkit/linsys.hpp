#pragma once

#include <string>
#include <vector>

#include "darbouxkit/matrix.hpp"

namespace darbouxkit {

inline constexpr const char* kConvention = "Xp=-AX";

// X' = -A X. Constructors taking other sign conventions convert and record it.
struct LinearSystem {
  Mat A;
  DerivationTable table;
  std::vector<std::string> conversions;

  size_t n() const { return A.rows(); }

  static LinearSystem minus_a(const Mat& A, const DerivationTable& t = {});
  // Y' = M Y
  static LinearSystem plus_m(const Mat& M, const DerivationTable& t = {});
  // Z' = skew(f, g, h) Z, i.e. Z' = Z x Omega with Omega = (f, g, h)
  static LinearSystem cross(const Expr& f, const Expr& g, const Expr& h, const DerivationTable& t = {});
};

// L_m = d^2 + p d + (q - m r), p = w'/w
struct SecondOrderFamily {
  Expr p, q, r, w;
  std::string m = "m";
  DerivationTable table;

  // validates p = w'/w and r != 0
  static SecondOrderFamily make(const Expr& p, const Expr& q, const Expr& r, const Expr& w,
                                const DerivationTable& table, const std::string& m = "m");
  Expr mpar() const { return Expr::param(m); }
  // q - m r
  Expr potential() const { return q - mpar() * r; }
};

struct GaugeMatrix {
  Mat P, Pinv;
  // exact inverse via adjugate; SingularGauge if det P is zero
  static GaugeMatrix make(const Mat& P);
  static GaugeMatrix make(const Mat& P, const Mat& Pinv); // checks P*Pinv = I
};

// A = A0 + m N, A0 = [[0,-1],[q,p]], N = [[0,0],[-r,0]]
LinearSystem companion(const SecondOrderFamily& f);
Mat companion_a0(const SecondOrderFamily& f);
Mat companion_n(const SecondOrderFamily& f);

// P[A] = P^-1 A P + P^-1 P'. If X solves [A] then Y = P^-1 X solves [P[A]].
LinearSystem gauge(const LinearSystem& s, const GaugeMatrix& P);
// System for Xt = T X: T A T^-1 - T' T^-1, i.e. gauge by T^-1.
LinearSystem transform(const LinearSystem& s, const GaugeMatrix& T);

// candidate' + A candidate, exact
Mat residual(const LinearSystem& s, const Mat& candidate);

// y1, y2 with y'' = -p y' - (q - m r) y added to the family table
DerivationTable solution_table(const SecondOrderFamily& f, const std::vector<std::string>& ys = {"y1", "y2"});
// [[y1, y2], [y1', y2']]
Mat companion_fundamental(const std::string& y1 = "y1", const std::string& y2 = "y2");

}
