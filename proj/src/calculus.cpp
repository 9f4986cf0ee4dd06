#include <unordered_map>

#include "internal.hpp"

namespace darbouxkit {

// ---- derivation table ----

void DerivationTable::set(const std::string& name, int order, const Expr& e) {
  rules_[{name, order}] = e;
}

void DerivationTable::set(const std::string& display, const Expr& e) {
  auto [n, k] = split_primes(display);
  set(n, k, e);
}

void DerivationTable::declare_free(const std::string& name) { free_.insert(name); }
void DerivationTable::declare_constant(const std::string& name) { const_.insert(name); }

void DerivationTable::add_second_order(const std::string& y, const Expr& p, const Expr& c) {
  set(y, 0, Expr::symbol(y, 1));
  set(y, 1, -p * Expr::symbol(y, 1) - c * Expr::symbol(y, 0));
}

void DerivationTable::merge(const DerivationTable& o) {
  for (auto& [k, v] : o.rules_) rules_[k] = v;
  free_.insert(o.free_.begin(), o.free_.end());
  const_.insert(o.const_.begin(), o.const_.end());
}

bool DerivationTable::has_rule(const std::string& name, int order) const {
  return rules_.count({name, order}) > 0;
}

Expr DerivationTable::symbol_derivative(const std::string& name, int order) const {
  auto it = rules_.find({name, order});
  if (it != rules_.end()) return it->second;
  if (const_.count(name)) return Expr();
  if (free_.count(name)) return Expr::symbol(name, order + 1);
  throw Error(ErrorCode::UnknownSymbol, "no derivative rule for '" + symbol_display_name(name, order) + "'",
              symbol_display_name(name, order));
}

namespace {

void collect_symbols(const Expr& e, std::set<std::pair<std::string, int>>& out) {
  for (AtomId a : e.atoms()) {
    const AtomData& d = atom_data(a);
    if (d.kind == AtomKind::Symbol) out.insert({d.name, d.order});
    else if (d.kind != AtomKind::Var && d.kind != AtomKind::Param) collect_symbols(d.arg, out);
  }
}

}

void DerivationTable::validate() const {
  for (auto& [k, v] : rules_) {
    std::set<std::pair<std::string, int>> syms;
    collect_symbols(v, syms);
    for (auto& [n, o] : syms) {
      if (has_rule(n, o) || free_.count(n) || const_.count(n)) continue;
      throw Error(ErrorCode::UnknownSymbol,
                  "rule for '" + symbol_display_name(k.first, k.second) + "' references underivable '" +
                      symbol_display_name(n, o) + "'",
                  symbol_display_name(n, o));
    }
  }
}

// ---- differentiation ----

namespace {

struct Differ {
  const DerivationTable& t;
  std::unordered_map<AtomId, Expr> cache;

  Expr atom(AtomId a) {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    const AtomData& d = atom_data(a);
    Expr r;
    switch (d.kind) {
      case AtomKind::Var: r = Expr(1); break;
      case AtomKind::Param: break;
      case AtomKind::Symbol: r = t.symbol_derivative(d.name, d.order); break;
      case AtomKind::Radical: {
        Expr rad = d.arg;
        r = expr(rad) / (2 * rad) * Expr(Poly::atom(a));
        break;
      }
      case AtomKind::Exp: r = expr(d.arg) * Expr(Poly::atom(a)); break;
      case AtomKind::Func: {
        Expr du = expr(d.arg);
        if (d.name == "sin") r = Expr::func("cos", d.arg) * du;
        else r = -Expr::func("sin", d.arg) * du;
        break;
      }
    }
    cache.emplace(a, r);
    return r;
  }

  Expr poly(const Poly& p) {
    Expr acc;
    for (AtomId a : p.atoms()) {
      Expr da = atom(a);
      if (da.is_zero()) continue;
      acc += Expr(p.partial(a)) * da;
    }
    return acc;
  }

  Expr expr(const Expr& e) {
    Expr dn = poly(e.num());
    if (e.den().empty()) return dn;
    Expr s;
    for (auto& f : e.den()) {
      Expr df = poly(f.p);
      if (df.is_zero()) continue;
      s += Expr(static_cast<long>(f.mult)) * df * ExprAccess::trusted(Poly(GaussRat(1)), {{f.p, 1}});
    }
    Expr dinv = ExprAccess::trusted(Poly(GaussRat(1)), e.den());
    return (dn - Expr(e.num()) * s) * dinv;
  }
};

}

Expr differentiate(const Expr& e, const DerivationTable& table) {
  Differ d{table, {}};
  return d.expr(e);
}

Expr differentiate(const Expr& e, const DerivationTable& table, int times) {
  Expr r = e;
  for (int k = 0; k < times; ++k) r = differentiate(r, table);
  return r;
}

// ---- substitution ----

namespace {

struct Subst {
  const std::map<std::string, Expr>& m;
  const DerivationTable& t;
  std::unordered_map<AtomId, Expr> cache;

  Expr atom(AtomId a) {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    const AtomData& d = atom_data(a);
    Expr self(Poly::atom(a));
    Expr r = self;
    switch (d.kind) {
      case AtomKind::Var: {
        auto f = m.find("x");
        if (f != m.end()) r = f->second;
        break;
      }
      case AtomKind::Param: {
        auto f = m.find(d.name);
        if (f != m.end()) r = f->second;
        break;
      }
      case AtomKind::Symbol: {
        auto f = m.find(d.display);
        if (f != m.end()) {
          r = f->second;
        } else if ((f = m.find(d.name)) != m.end()) {
          r = differentiate(f->second, t, d.order);
        }
        break;
      }
      case AtomKind::Radical:
      case AtomKind::Exp:
      case AtomKind::Func: {
        auto f = m.find(d.display);
        if (f != m.end()) {
          r = f->second;
          break;
        }
        Expr arg = expr(d.arg);
        if (arg.sexpr() == d.arg.sexpr()) break;
        if (d.kind == AtomKind::Radical) r = Expr::sqrt(arg);
        else if (d.kind == AtomKind::Exp) r = Expr::exp(arg);
        else r = Expr::func(d.name, arg);
        break;
      }
    }
    cache.emplace(a, r);
    return r;
  }

  Expr poly(const Poly& p) {
    Expr acc;
    for (auto& [mono, c] : p.terms()) {
      Expr t(c);
      for (auto& [a, e] : mono.f) t *= atom(a).pow(e);
      acc += t;
    }
    return acc;
  }

  Expr expr(const Expr& e) {
    Expr r = poly(e.num());
    for (auto& f : e.den()) r /= poly(f.p).pow(f.mult);
    return r;
  }
};

}

Expr substitute(const Expr& e, const std::map<std::string, Expr>& map, const DerivationTable& table) {
  if (map.empty()) return e;
  Subst s{map, table, {}};
  return s.expr(e);
}

}
