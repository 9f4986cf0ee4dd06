#pragma once

#include <map>
#include <string>
#include <vector>

#include "darbouxkit/linsys.hpp"

namespace darbouxkit {

// How to turn symbolic data into numbers: `subs` replaces symbols with
// explicit expressions in x (closed forms for registered exponentials,
// concrete curvature, ...), `params` binds parameters such as m.
struct NumericInstance {
  std::map<std::string, Expr> subs;
  Bindings params;
};

struct Interval {
  double a = 0.0, b = 1.0, h = 1e-3;
};

// States are n x k matrices stored row-major; k = 1 for a single vector.
struct Trajectory {
  std::vector<double> xs;
  std::vector<std::vector<cplx>> states;
  size_t n = 0, k = 0;
  std::string id;
  cplx at(size_t step, size_t i, size_t j = 0) const { return states[step][i * k + j]; }
};

// Numeric A(x) for X' = -A X
class NumericMatrix {
public:
  NumericMatrix(const Mat& A, const NumericInstance& inst, const DerivationTable& t,
                const std::vector<std::string>& slots = {});
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  // EvalSingularity carries x
  void eval(double x, const cplx* slots, std::vector<cplx>& out) const;

private:
  size_t r_ = 0, c_ = 0;
  std::vector<NumericExpr> e_;
};

// classical RK4 on the uniform grid of `iv`
Trajectory integrate(const LinearSystem& s, const NumericInstance& inst, const std::vector<std::vector<cplx>>& X0,
                     const Interval& iv);

struct CheckReport {
  std::string check;
  double max_residual = 0.0;
  double tolerance = 1e-8;
  bool pass = false;
};

// Residual candidate' + A candidate evaluated with y1, y2 (and first derivatives)
// bound to an RK4 fundamental system of the scalar family, at `samples` grid points.
double residual_sweep(const Mat& candidate, const LinearSystem& s, const SecondOrderFamily& scalar,
                      const NumericInstance& inst, const Interval& iv, int samples = 11);

// Integrates s from candidate(a) and compares with candidate evaluated on the scalar trajectory.
double trajectory_agreement(const Mat& candidate, const LinearSystem& s, const SecondOrderFamily& scalar,
                            const NumericInstance& inst, const Interval& iv);

// max |F(t) - F(0)| with the trajectory components bound to `names` (column `col`)
double drift(const Expr& F, const std::vector<std::string>& names, const Trajectory& tr, const NumericInstance& inst,
             size_t col = 0);

// y'' = -y from (1, 0) on [0, 1]: endpoint errors at h and h/2 and their ratio
struct OrderCheck {
  double err_h, err_h2, ratio;
};
OrderCheck rk4_order_check(double h = 0.1);

}
