#include <cmath>
#include <unordered_map>

#include "internal.hpp"

namespace darbouxkit {

namespace {

enum class Kind { X, Slot, Const, Sqrt, Exp, Sin, Cos };

struct Term {
  cplx c;
  std::vector<std::pair<int, int>> f; // local atom index, exponent
};

cplx ipow(cplx b, int e) {
  cplx r(1.0, 0.0);
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

}

struct NumericExpr::Node {
  struct AtomEval {
    Kind kind;
    int slot = -1;
    cplx value;
    std::shared_ptr<const Node> arg;
  };
  std::vector<AtomEval> atoms;
  std::vector<Term> num;
  std::vector<std::pair<std::vector<Term>, int>> den;

  cplx eval_terms(const std::vector<Term>& ts, const std::vector<cplx>& av) const {
    cplx s = 0;
    for (auto& t : ts) {
      cplx v = t.c;
      for (auto& [i, e] : t.f) v *= ipow(av[i], e);
      s += v;
    }
    return s;
  }

  cplx eval(cplx x, const cplx* slots) const {
    std::vector<cplx> av(atoms.size());
    for (size_t k = 0; k < atoms.size(); ++k) {
      auto& a = atoms[k];
      switch (a.kind) {
        case Kind::X: av[k] = x; break;
        case Kind::Slot: av[k] = slots[a.slot]; break;
        case Kind::Const: av[k] = a.value; break;
        case Kind::Sqrt: av[k] = std::sqrt(a.arg->eval(x, slots)); break;
        case Kind::Exp: av[k] = std::exp(a.arg->eval(x, slots)); break;
        case Kind::Sin: av[k] = std::sin(a.arg->eval(x, slots)); break;
        case Kind::Cos: av[k] = std::cos(a.arg->eval(x, slots)); break;
      }
    }
    cplx n = eval_terms(num, av);
    if (den.empty()) return n;
    cplx d = 1;
    for (auto& [ts, mult] : den) d *= ipow(eval_terms(ts, av), mult);
    if (std::abs(d) == 0.0 || !std::isfinite(std::abs(d)))
      throw Error(ErrorCode::EvalSingularity, "denominator vanishes at x = " + std::to_string(x.real()));
    return n / d;
  }
};

namespace {

struct Compiler {
  const std::vector<std::string>& names;
  const Bindings& fixed;
  std::unordered_map<std::string, int> slot_of;
  bool x_bound = true;

  std::shared_ptr<const NumericExpr::Node> compile(const Expr& e) {
    auto node = std::make_shared<NumericExpr::Node>();
    std::unordered_map<AtomId, int> local;
    auto idx = [&](AtomId a) -> int {
      auto it = local.find(a);
      if (it != local.end()) return it->second;
      node->atoms.push_back(resolve(a));
      int k = static_cast<int>(node->atoms.size()) - 1;
      local.emplace(a, k);
      return k;
    };
    auto terms = [&](const Poly& p) {
      std::vector<Term> out;
      for (auto& [m, c] : p.terms()) {
        Term t{c.to_complex(), {}};
        for (auto& [a, ex] : m.f) t.f.emplace_back(idx(a), ex);
        out.push_back(std::move(t));
      }
      return out;
    };
    node->num = terms(e.num());
    for (auto& f : e.den()) node->den.emplace_back(terms(f.p), f.mult);
    return node;
  }

  NumericExpr::Node::AtomEval resolve(AtomId a) {
    const AtomData& d = atom_data(a);
    NumericExpr::Node::AtomEval ev{Kind::Const, -1, {}, nullptr};
    auto s = slot_of.find(d.display);
    if (s != slot_of.end()) {
      ev.kind = Kind::Slot;
      ev.slot = s->second;
      return ev;
    }
    auto f = fixed.find(d.display);
    if (f != fixed.end()) {
      ev.value = f->second;
      return ev;
    }
    switch (d.kind) {
      case AtomKind::Var:
        if (!x_bound) throw Error(ErrorCode::UnboundSymbol, "no value bound for 'x'", "x");
        ev.kind = Kind::X;
        return ev;
      case AtomKind::Param:
      case AtomKind::Symbol:
        throw Error(ErrorCode::UnboundSymbol, "no value bound for '" + d.display + "'", d.display);
      case AtomKind::Radical: ev.kind = Kind::Sqrt; break;
      case AtomKind::Exp: ev.kind = Kind::Exp; break;
      case AtomKind::Func: ev.kind = d.name == "sin" ? Kind::Sin : Kind::Cos; break;
    }
    ev.arg = compile(d.arg);
    return ev;
  }
};

}

NumericExpr::NumericExpr(const Expr& e, const std::vector<std::string>& slot_names, const Bindings& fixed) {
  Compiler c{slot_names, fixed, {}};
  for (size_t k = 0; k < slot_names.size(); ++k) c.slot_of[slot_names[k]] = static_cast<int>(k);
  root_ = c.compile(e);
}

cplx NumericExpr::operator()(cplx x, const cplx* slots) const {
  if (!root_) return 0;
  return root_->eval(x, slots);
}

cplx evaluate(const Expr& e, const Bindings& b) {
  static const std::vector<std::string> none;
  Compiler c{none, b, {}, b.count("x") > 0};
  return c.compile(e)->eval(0.0, nullptr);
}

}
