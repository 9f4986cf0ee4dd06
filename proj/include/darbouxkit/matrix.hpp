#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "darbouxkit/expr.hpp"

namespace darbouxkit {

// Dense matrix of exact expressions.
class Mat {
public:
  Mat() = default;
  Mat(size_t rows, size_t cols);
  Mat(std::initializer_list<std::initializer_list<Expr>> rows);

  static Mat identity(size_t n);
  static Mat diag(const std::vector<Expr>& d);
  static Mat column(const std::vector<Expr>& v);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  Expr& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Expr& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  std::vector<Expr> col(size_t j) const;

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Expr& s, const Mat& a);
  friend Mat operator*(const Mat& a, const Expr& s) { return s * a; }
  friend Mat operator/(const Mat& a, const Expr& s) { return s.inverse() * a; }

  Mat transpose() const;
  Expr trace() const;
  Expr det() const;
  Mat adjugate() const;
  // exact inverse; SingularGauge if the determinant is zero
  Mat inverse() const;

  bool is_zero() const;
  // entrywise semantic equality
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat map(const std::function<Expr(const Expr&)>& f) const;
  // (i, j) of the first nonzero entry, or (-1, -1)
  std::pair<int, int> first_nonzero() const;

private:
  size_t r_ = 0, c_ = 0;
  std::vector<Expr> a_;
};

Mat differentiate(const Mat& m, const DerivationTable& t);
Mat substitute(const Mat& m, const std::map<std::string, Expr>& map, const DerivationTable& t = {});
Mat commutator(const Mat& a, const Mat& b);
// skew(f, g, h) = [[0,h,-g],[-h,0,f],[g,-f,0]]
Mat skew(const Expr& f, const Expr& g, const Expr& h);

}
