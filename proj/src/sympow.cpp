#include <map>

#include "darbouxkit/sympow.hpp"

namespace darbouxkit {

namespace {

using XPoly = std::map<std::vector<int>, Expr>;

void basis_rec(size_t k, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k + 1 == cur.size()) {
    cur[k] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[k] = e;
    basis_rec(k + 1, left - e, cur, out);
  }
}

// coefficients of P in the basis
std::vector<Expr> coords(const XPoly& p, const std::vector<std::vector<int>>& basis) {
  std::vector<Expr> v;
  for (auto& b : basis) {
    auto it = p.find(b);
    v.push_back(it == p.end() ? Expr() : it->second);
  }
  return v;
}

// image of X_k under the substitution: sum_i M_ik X_i
XPoly linear_form(const Mat& M, size_t k) {
  XPoly p;
  for (size_t i = 0; i < M.rows(); ++i) {
    if (M(i, k).is_zero()) continue;
    std::vector<int> e(M.rows(), 0);
    e[i] = 1;
    p[e] = M(i, k);
  }
  return p;
}

XPoly mul(const XPoly& a, const XPoly& b) {
  XPoly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r[e] += ca * cb;
    }
  return r;
}

void check(const Mat& M, int m) {
  if (!M.square()) throw Error(ErrorCode::InvalidArgument, "symmetric power of a non-square matrix");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "symmetric power order must be >= 1");
}

}

std::vector<std::vector<int>> monomial_basis(size_t n, int m) {
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  std::vector<int> cur(n, 0);
  basis_rec(0, m, cur, out);
  return out;
}

Mat sym_group(const Mat& M, int m) {
  check(M, m);
  size_t n = M.rows();
  auto basis = monomial_basis(n, m);
  std::vector<XPoly> forms;
  for (size_t k = 0; k < n; ++k) forms.push_back(linear_form(M, k));
  Mat S(basis.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    XPoly img{{std::vector<int>(n, 0), Expr(1)}};
    for (size_t k = 0; k < n; ++k)
      for (int e = 0; e < basis[j][k]; ++e) img = mul(img, forms[k]);
    auto c = coords(img, basis);
    for (size_t i = 0; i < basis.size(); ++i) S(i, j) = c[i];
  }
  return S;
}

Mat sym_lie(const Mat& M, int m) {
  check(M, m);
  size_t n = M.rows();
  auto basis = monomial_basis(n, m);
  Mat S(basis.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    XPoly img;
    for (size_t k = 0; k < n; ++k) {
      int e = basis[j][k];
      if (!e) continue;
      std::vector<int> d = basis[j];
      d[k] -= 1;
      XPoly part{{d, Expr(static_cast<long>(e))}};
      for (auto& [ex, c] : mul(part, linear_form(M, k))) img[ex] += c;
    }
    auto c = coords(img, basis);
    for (size_t i = 0; i < basis.size(); ++i) S(i, j) = c[i];
  }
  return S;
}

std::vector<Expr> multinomial_weights(size_t n, int m) {
  std::vector<Expr> w;
  for (auto& b : monomial_basis(n, m)) {
    mpz_class num, den = 1;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(m));
    for (int e : b) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
      den *= f;
    }
    w.push_back(Expr(GaussRat(mpq_class(num, den))));
  }
  return w;
}

std::vector<Expr> sym_vector(const std::vector<Expr>& v, int m) {
  auto basis = monomial_basis(v.size(), m);
  auto w = multinomial_weights(v.size(), m);
  std::vector<Expr> out;
  for (size_t j = 0; j < basis.size(); ++j) {
    Expr t = w[j];
    for (size_t k = 0; k < v.size(); ++k) t *= v[k].pow(basis[j][k]);
    out.push_back(t);
  }
  return out;
}

ThirdOrderOperator sym2_operator(const Expr& p, const Expr& c, const DerivationTable& t) {
  Expr dp = differentiate(p, t), dc = differentiate(c, t);
  return {3 * p, 4 * c + dp + 2 * p * p, 2 * (dc + 2 * p * c)};
}

ThirdOrderOperator sym2_operator(const SecondOrderFamily& f) { return sym2_operator(f.p, f.q, f.table); }

Expr apply_operator(const ThirdOrderOperator& L, const Expr& u, const DerivationTable& t) {
  Expr d1 = differentiate(u, t), d2 = differentiate(d1, t), d3 = differentiate(d2, t);
  return d3 + L.a2 * d2 + L.a1 * d1 + L.a0 * u;
}

LinearSystem sym_system(const LinearSystem& s, int m) {
  LinearSystem r{sym_lie(s.A, m), s.table, s.conversions};
  return r;
}

}
