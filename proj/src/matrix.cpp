#include "darbouxkit/matrix.hpp"

namespace darbouxkit {

Mat::Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Expr>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  for (auto& row : rows) {
    if (row.size() != c_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Expr(1);
  return m;
}

Mat Mat::diag(const std::vector<Expr>& d) {
  Mat m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::column(const std::vector<Expr>& v) {
  Mat m(v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<Expr> Mat::col(size_t j) const {
  std::vector<Expr> v;
  for (size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
  return v;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& e : m.a_) e = -e;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch in +");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch in -");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch in *");
  Mat m(a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t j = 0; j < b.c_; ++j) {
      Expr s;
      for (size_t k = 0; k < a.c_; ++k) {
        const Expr& x = a(i, k);
        const Expr& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        s += x * y;
      }
      m(i, j) = s;
    }
  return m;
}

Mat operator*(const Expr& s, const Mat& a) {
  Mat m = a;
  for (auto& e : m.a_) e = s * e;
  return m;
}

Mat Mat::transpose() const {
  Mat m(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Expr Mat::trace() const {
  Expr s;
  for (size_t i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
  return s;
}

namespace {

Mat minor_of(const Mat& m, size_t r, size_t c) {
  Mat s(m.rows() - 1, m.cols() - 1);
  for (size_t i = 0, ii = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    for (size_t j = 0, jj = 0; j < m.cols(); ++j) {
      if (j == c) continue;
      s(ii, jj++) = m(i, j);
    }
    ++ii;
  }
  return s;
}

Expr det_elim(Mat m) {
  size_t n = m.rows();
  Expr d(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Expr();
    if (p != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      d = -d;
    }
    d *= m(k, k);
    Expr inv = m(k, k).inverse();
    for (size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Expr f = m(i, k) * inv;
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

}

Expr Mat::det() const {
  if (!square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  size_t n = r_;
  if (n == 0) return Expr(1);
  if (n == 1) return a_[0];
  if (n == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  if (n > 4) return det_elim(*this);
  Expr s;
  for (size_t j = 0; j < n; ++j) {
    if ((*this)(0, j).is_zero()) continue;
    Expr t = (*this)(0, j) * minor_of(*this, 0, j).det();
    s += j % 2 ? -t : t;
  }
  return s;
}

Mat Mat::adjugate() const {
  if (!square()) throw Error(ErrorCode::InvalidArgument, "adjugate of a non-square matrix");
  size_t n = r_;
  Mat m(n, n);
  if (n == 1) {
    m(0, 0) = Expr(1);
    return m;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Expr c = minor_of(*this, i, j).det();
      m(j, i) = (i + j) % 2 ? -c : c;
    }
  return m;
}

Mat Mat::inverse() const {
  Expr d = det();
  if (d.is_zero()) throw Error(ErrorCode::SingularGauge, "matrix determinant normalizes to zero");
  return adjugate() / d;
}

bool Mat::is_zero() const {
  for (auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (size_t k = 0; k < a.a_.size(); ++k)
    if (a.a_[k] != b.a_[k]) return false;
  return true;
}

Mat Mat::map(const std::function<Expr(const Expr&)>& f) const {
  Mat m = *this;
  for (auto& e : m.a_) e = f(e);
  return m;
}

std::pair<int, int> Mat::first_nonzero() const {
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if (!(*this)(i, j).is_zero()) return {static_cast<int>(i), static_cast<int>(j)};
  return {-1, -1};
}

Mat differentiate(const Mat& m, const DerivationTable& t) {
  return m.map([&](const Expr& e) { return differentiate(e, t); });
}

Mat substitute(const Mat& m, const std::map<std::string, Expr>& map, const DerivationTable& t) {
  return m.map([&](const Expr& e) { return substitute(e, map, t); });
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat skew(const Expr& f, const Expr& g, const Expr& h) {
  return Mat{{Expr(), h, -g}, {-h, Expr(), f}, {g, -f, Expr()}};
}

}
