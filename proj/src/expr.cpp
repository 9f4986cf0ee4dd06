#include <algorithm>

#include "internal.hpp"

namespace darbouxkit {

struct Expr::Rep {
  Poly num;
  std::vector<DenFactor> den;
};

namespace {

bool same_factor(const DenFactor& a, const Poly& p) { return a.p == p; }

bool has_radical(const Poly& p) {
  for (AtomId a : p.atoms())
    if (detail::is_radical(a)) return true;
  return false;
}

// Strip (num, den) of every den factor dividing num.
void cancel(Poly& num, std::vector<DenFactor>& den) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (auto& f : den) {
    Poly q;
    while (f.mult > 0 && Poly::divide(num, f.p, q)) {
      num = std::move(q);
      --f.mult;
    }
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const DenFactor& f) { return f.mult == 0; }),
            den.end());
}

void push_factor(std::vector<DenFactor>& den, const Poly& p, int mult) {
  if (mult <= 0) return;
  for (auto& f : den)
    if (same_factor(f, p)) {
      f.mult += mult;
      return;
    }
  den.push_back({p, mult});
}

// Multiply num/den by 1/d^mult keeping the normal form.
void absorb(Poly& num, std::vector<DenFactor>& den, Poly d, int mult) {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZeroExpr, "denominator normalizes to zero");
  // rationalize radicals
  for (;;) {
    std::optional<AtomId> s;
    for (AtomId a : d.atoms())
      if (detail::is_radical(a)) {
        s = a;
        break;
      }
    if (!s) break;
    Poly conj = d.flip_radical(*s);
    num = num * conj.pow(mult);
    d = d * conj;
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZeroExpr, "denominator normalizes to zero");
  }
  // monomial content
  Monomial content = d.lead_monomial();
  for (auto& [m, c] : d.terms()) {
    Monomial keep;
    for (auto& [a, e] : content.f) {
      int k = m.exponent(a);
      if (detail::is_exp(a) ? k == 1 : k > 0) keep.f.emplace_back(a, std::min(e, k));
    }
    content = std::move(keep);
    if (content.empty()) break;
  }
  if (!content.empty()) {
    Poly q;
    Poly::divide(d, Poly::term(content, GaussRat(1)), q);
    d = std::move(q);
    for (auto& [a, e] : content.f) {
      if (detail::is_exp(a)) {
        num = num * Poly::atom(detail::negate_exp(a), mult);
        continue;
      }
      Poly pa = Poly::atom(a);
      int k = e * mult;
      Poly qn;
      while (k > 0 && Poly::divide(num, pa, qn)) {
        num = std::move(qn);
        --k;
      }
      push_factor(den, pa, k);
    }
  }
  GaussRat lc = d.lead_coeff();
  if (!lc.is_one()) {
    GaussRat inv = GaussRat(1) / lc;
    GaussRat s(1);
    for (int k = 0; k < mult; ++k) s *= inv;
    num = num.scaled(s);
    d = d.scaled(inv);
  }
  if (d.is_constant()) return;
  int k = mult;
  Poly q;
  while (k > 0 && Poly::divide(num, d, q)) {
    num = std::move(q);
    --k;
  }
  push_factor(den, d, k);
  if (num.is_zero()) den.clear();
}

Poly expand(const std::vector<DenFactor>& den) {
  Poly p(GaussRat(1));
  for (auto& f : den) p = p * f.p.pow(f.mult);
  return p;
}

}

Expr ExprAccess::trusted(Poly num, std::vector<DenFactor> den) {
  auto r = std::make_shared<Expr::Rep>();
  r->num = std::move(num);
  r->den = std::move(den);
  return Expr(std::shared_ptr<const Expr::Rep>(std::move(r)));
}

Expr::Expr() {
  static const std::shared_ptr<const Rep> zero = std::make_shared<const Rep>();
  rep_ = zero;
}
Expr::Expr(long n) : Expr(GaussRat(n)) {}
Expr::Expr(const GaussRat& c) : Expr(Poly(c)) {}
Expr::Expr(const Poly& p) {
  auto r = std::make_shared<Rep>();
  r->num = p;
  rep_ = std::move(r);
}

const Poly& Expr::num() const { return rep_->num; }
const std::vector<DenFactor>& Expr::den() const { return rep_->den; }

Expr Expr::x() { return Expr(Poly::atom(detail::var_atom())); }
Expr Expr::imag() { return Expr(GaussRat::i()); }

Expr Expr::param(const std::string& name) {
  return Expr(Poly::atom(detail::intern_atom(AtomKind::Param, name, 0, Expr())));
}

Expr Expr::symbol(const std::string& name, int order) {
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "empty symbol name");
  return Expr(Poly::atom(detail::intern_atom(AtomKind::Symbol, name, order, Expr())));
}

Expr Expr::symbol_display(const std::string& display) {
  auto [n, k] = split_primes(display);
  return symbol(n, k);
}

Expr Expr::rational(long n, long d) { return Expr(GaussRat(mpq_class(n, d))); }

Expr Expr::from_parts(Poly num, std::vector<DenFactor> den) {
  Poly n = std::move(num);
  std::vector<DenFactor> d;
  for (auto& f : den) absorb(n, d, f.p, f.mult);
  return ExprAccess::trusted(std::move(n), std::move(d));
}

namespace {

// sqrt of an exact rational, if it is a perfect square
std::optional<GaussRat> rational_sqrt(const GaussRat& c) {
  if (!c.is_real() || sgn(c.re()) < 0) return std::nullopt;
  mpz_class n = c.re().get_num(), d = c.re().get_den();
  mpz_class rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return GaussRat(mpq_class(rn, rd));
}

}

Expr Expr::sqrt(const Expr& radicand) {
  if (radicand.is_zero()) return Expr();
  if (auto c = radicand.constant_value())
    if (auto r = rational_sqrt(*c)) return Expr(*r);
  // sqrt(N/D) = sqrt(N*D)/D
  Poly d = expand(radicand.den());
  Poly p = radicand.num() * d;
  for (AtomId a : p.atoms())
    if (detail::is_radical(a))
      throw Error(ErrorCode::InvalidArgument, "nested radicals are not supported");
  Expr rad{p};
  Expr s(Poly::atom(detail::intern_atom(AtomKind::Radical, "sqrt", 0, rad)));
  if (radicand.den().empty()) return s;
  return s / Expr(d);
}

Expr Expr::exp(const Expr& arg) {
  if (arg.is_zero()) return Expr(1);
  return Expr(Poly::atom(detail::intern_atom(AtomKind::Exp, "exp", 0, arg)));
}

Expr Expr::func(const std::string& name, const Expr& arg) {
  if (name != "sin" && name != "cos")
    throw Error(ErrorCode::InvalidArgument, "unregistered function '" + name + "'");
  if (arg.is_zero()) return Expr(name == "cos" ? 1 : 0);
  return Expr(Poly::atom(detail::intern_atom(AtomKind::Func, name, 0, arg)));
}

bool Expr::is_constant() const { return den().empty() && num().is_constant(); }

std::optional<GaussRat> Expr::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num().constant();
}

std::set<AtomId> Expr::atoms() const {
  std::set<AtomId> s = num().atoms();
  for (auto& f : den()) {
    auto t = f.p.atoms();
    s.insert(t.begin(), t.end());
  }
  return s;
}

bool Expr::depends_on_x() const {
  for (AtomId a : atoms()) {
    const AtomData& d = atom_data(a);
    switch (d.kind) {
      case AtomKind::Var:
      case AtomKind::Symbol: return true;
      case AtomKind::Param: break;
      default:
        if (d.arg.depends_on_x()) return true;
    }
  }
  return false;
}

bool Expr::depends_on(const std::string& name) const {
  return free_names().count(name) > 0;
}

std::set<std::string> Expr::free_names() const {
  std::set<std::string> out;
  for (AtomId a : atoms()) {
    const AtomData& d = atom_data(a);
    if (d.kind == AtomKind::Param || d.kind == AtomKind::Symbol) out.insert(d.display);
    else if (d.kind != AtomKind::Var) {
      auto s = d.arg.free_names();
      out.insert(s.begin(), s.end());
    }
  }
  return out;
}

Expr Expr::operator-() const {
  return ExprAccess::trusted(-num(), den());
}

Expr& Expr::operator+=(const Expr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den().empty() && o.den().empty()) return *this = Expr(num() + o.num());
  // lcm over structurally equal factors
  std::vector<DenFactor> l = den();
  for (auto& f : o.den()) {
    bool found = false;
    for (auto& g : l)
      if (same_factor(g, f.p)) {
        g.mult = std::max(g.mult, f.mult);
        found = true;
      }
    if (!found) l.push_back(f);
  }
  auto cofactor = [&](const std::vector<DenFactor>& mine) {
    Poly c(GaussRat(1));
    for (auto& g : l) {
      int have = 0;
      for (auto& f : mine)
        if (same_factor(f, g.p)) have = f.mult;
      if (g.mult > have) c = c * g.p.pow(g.mult - have);
    }
    return c;
  };
  Poly n = num() * cofactor(den()) + o.num() * cofactor(o.den());
  cancel(n, l);
  return *this = ExprAccess::trusted(std::move(n), std::move(l));
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr& Expr::operator*=(const Expr& o) {
  if (is_zero() || o.is_zero()) return *this = Expr();
  if (den().empty() && o.den().empty()) return *this = Expr(num() * o.num());
  Poly n1 = num(), n2 = o.num();
  std::vector<DenFactor> d1 = den(), d2 = o.den();
  cancel(n1, d2);
  cancel(n2, d1);
  bool radicals = has_radical(n1) && has_radical(n2);
  Poly n = n1 * n2;
  for (auto& f : d2) push_factor(d1, f.p, f.mult);
  // sqrt(u)^2 -> u can expose a new common factor
  if (radicals) cancel(n, d1);
  return *this = ExprAccess::trusted(std::move(n), std::move(d1));
}

Expr& Expr::operator/=(const Expr& o) { return *this *= o.inverse(); }

Expr Expr::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZeroExpr, "division by zero expression");
  Poly n = expand(den());
  std::vector<DenFactor> d;
  absorb(n, d, num(), 1);
  return ExprAccess::trusted(std::move(n), std::move(d));
}

Expr Expr::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (den().empty()) return Expr(num().pow(k));
  std::vector<DenFactor> d = den();
  for (auto& f : d) f.mult *= k;
  if (k == 0) return Expr(1);
  Poly n = num().pow(k);
  if (k > 1 && has_radical(num())) cancel(n, d);
  return ExprAccess::trusted(std::move(n), std::move(d));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.rep_ == b.rep_) return true;
  return (a - b).is_zero();
}

Expr hermite(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative Hermite index");
  Expr x = Expr::x();
  Expr h0(1), h1 = 2 * x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    Expr h2 = 2 * x * h1 - Expr(2L * k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

}
