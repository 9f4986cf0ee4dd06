#include <algorithm>
#include <cctype>

#include "internal.hpp"

namespace darbouxkit {

// ---- printing ----

namespace {

using SortKey = std::pair<int, std::vector<std::pair<std::string, int>>>;

SortKey sort_key(const Monomial& m) {
  SortKey k{m.degree(), {}};
  for (auto& [a, e] : m.f) k.second.emplace_back(atom_data(a).display, e);
  std::sort(k.second.begin(), k.second.end());
  return k;
}

std::vector<std::pair<const Monomial*, const GaussRat*>> ordered_terms(const Poly& p) {
  std::vector<std::tuple<SortKey, const Monomial*, const GaussRat*>> v;
  for (auto& [m, c] : p.terms()) v.emplace_back(sort_key(m), &m, &c);
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
    auto& ka = std::get<0>(a);
    auto& kb = std::get<0>(b);
    if (ka.first != kb.first) return ka.first > kb.first;
    return ka.second < kb.second;
  });
  std::vector<std::pair<const Monomial*, const GaussRat*>> out;
  for (auto& t : v) out.emplace_back(std::get<1>(t), std::get<2>(t));
  return out;
}

std::vector<std::pair<AtomId, int>> ordered_factors(const Monomial& m) {
  auto f = m.f;
  std::sort(f.begin(), f.end(),
            [](auto& a, auto& b) { return atom_data(a.first).display < atom_data(b.first).display; });
  return f;
}

std::string atom_sexpr(AtomId a) {
  const AtomData& d = atom_data(a);
  switch (d.kind) {
    case AtomKind::Var: return "x";
    case AtomKind::Param: return "(par " + d.name + ")";
    case AtomKind::Symbol: return "(sym " + d.name + " " + std::to_string(d.order) + ")";
    case AtomKind::Radical: return "(sqrt " + d.arg.sexpr() + ")";
    case AtomKind::Exp: return "(exp " + d.arg.sexpr() + ")";
    case AtomKind::Func: return "(fn " + d.name + " " + d.arg.sexpr() + ")";
  }
  return "?";
}

std::string term_sexpr(const Monomial& m, const GaussRat& c) {
  std::vector<std::string> parts;
  for (auto& [a, e] : ordered_factors(m))
    parts.push_back(e == 1 ? atom_sexpr(a) : "(^ " + atom_sexpr(a) + " " + std::to_string(e) + ")");
  if (parts.empty()) return c.sexpr();
  if (c.is_one() && parts.size() == 1) return parts[0];
  std::string s = "(*";
  if (!c.is_one()) s += " " + c.sexpr();
  for (auto& p : parts) s += " " + p;
  return s + ")";
}

std::string poly_sexpr(const Poly& p) {
  if (p.is_zero()) return "0";
  auto ts = ordered_terms(p);
  if (ts.size() == 1) return term_sexpr(*ts[0].first, *ts[0].second);
  std::string s = "(+";
  for (auto& [m, c] : ts) s += " " + term_sexpr(*m, *c);
  return s + ")";
}

std::string term_infix(const Monomial& m, const GaussRat& c) {
  std::string f;
  for (auto& [a, e] : ordered_factors(m)) {
    if (!f.empty()) f += "*";
    f += atom_data(a).display;
    if (e != 1) f += "^" + std::to_string(e);
  }
  if (f.empty()) return c.infix();
  if (c.is_one()) return f;
  if (c == GaussRat(-1)) return "-" + f;
  return c.infix() + "*" + f;
}

std::string poly_infix(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto& [m, c] : ordered_terms(p)) {
    std::string t = term_infix(*m, *c);
    if (s.empty()) s = t;
    else if (t[0] == '-') s += " - " + t.substr(1);
    else s += " + " + t;
  }
  return s;
}

std::vector<std::pair<std::string, int>> ordered_den(const std::vector<DenFactor>& den,
                                                     std::string (*fmt)(const Poly&)) {
  std::vector<std::pair<std::string, int>> v;
  for (auto& f : den) v.emplace_back(fmt(f.p), f.mult);
  std::sort(v.begin(), v.end());
  return v;
}


}

std::string Expr::sexpr() const {
  if (den().empty()) return poly_sexpr(num());
  auto d = ordered_den(den(), poly_sexpr);
  std::string ds;
  if (d.size() == 1 && d[0].second == 1) {
    ds = d[0].first;
  } else {
    ds = "(*";
    for (auto& [p, k] : d) ds += k == 1 ? " " + p : " (^ " + p + " " + std::to_string(k) + ")";
    ds += ")";
  }
  return "(/ " + poly_sexpr(num()) + " " + ds + ")";
}

std::string Expr::infix() const {
  std::string n = poly_infix(num());
  if (den().empty()) return n;
  if (num().terms().size() > 1) n = "(" + n + ")";
  std::string ds;
  auto d = ordered_den(den(), poly_infix);
  for (size_t k = 0; k < d.size(); ++k) {
    bool simple = d[k].first.find_first_of(" +-*/") == std::string::npos;
    std::string f = simple ? d[k].first : "(" + d[k].first + ")";
    if (d[k].second != 1) f += "^" + std::to_string(d[k].second);
    ds += (k ? "*" : "") + f;
  }
  if (d.size() > 1) ds = "(" + ds + ")";
  return n + "/" + ds;
}

// ---- parsing ----

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Expr name_atom(const std::string& tok, const ParseContext& ctx) {
  if (tok == "x") return Expr::x();
  if (tok == "i") return Expr::imag();
  auto [base, order] = split_primes(tok);
  if (base.empty() || !is_ident_start(base[0]))
    throw Error(ErrorCode::Parse, "bad identifier '" + tok + "'");
  for (char c : base)
    if (!is_ident_char(c)) throw Error(ErrorCode::Parse, "bad identifier '" + tok + "'");
  if (ctx.parameters.count(base)) {
    if (order) throw Error(ErrorCode::Parse, "parameter '" + base + "' cannot carry primes");
    return Expr::param(base);
  }
  return Expr::symbol(base, order);
}

Expr power(const Expr& base, const Expr& ex) {
  auto c = ex.constant_value();
  if (!c || !c->is_real()) throw Error(ErrorCode::Parse, "exponent must be a rational constant");
  const mpq_class& q = c->re();
  if (q.get_den() == 1) return base.pow(static_cast<int>(q.get_num().get_si()));
  if (q.get_den() == 2) return Expr::sqrt(base).pow(static_cast<int>(q.get_num().get_si()));
  throw Error(ErrorCode::Parse, "only integer and half-integer exponents are allowed");
}

class Infix {
public:
  Infix(const std::string& s, const ParseContext& c) : s_(s), ctx_(c) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  const std::string& s_;
  const ParseContext& ctx_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& m) {
    throw Error(ErrorCode::Parse, m + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || is_ident_start(c) || c == '(';
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      char c = peek();
      if (c == '+') { ++pos_; e += term(); }
      else if (c == '-') { ++pos_; e -= term(); }
      else return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      char c = peek();
      if (c == '*') { ++pos_; e *= unary(); }
      else if (c == '/') {
        ++pos_;
        Expr d = unary();
        if (d.is_zero()) fail("division by zero");
        e /= d;
      } else if (starts_primary(c)) {
        e *= unary();
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    char c = peek();
    if (c == '-') { ++pos_; return -unary(); }
    if (c == '+') { ++pos_; return unary(); }
    Expr b = primary();
    if (peek() == '^') {
      ++pos_;
      return power(b, unary());
    }
    return b;
  }

  Expr primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t b = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return Expr(GaussRat::from_string(s_.substr(b, pos_ - b)));
    }
    if (is_ident_start(c)) {
      size_t b = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      std::string id = s_.substr(b, pos_ - b);
      if ((id == "exp" || id == "sqrt" || id == "sin" || id == "cos") && peek() == '(') {
        ++pos_;
        Expr a = expr();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        if (id == "exp") return Expr::exp(a);
        if (id == "sqrt") return Expr::sqrt(a);
        return Expr::func(id, a);
      }
      while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
      return name_atom(s_.substr(b, pos_ - b), ctx_);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

struct SNode {
  std::string atom;
  std::vector<SNode> kids;
  bool list = false;
};

class SParser {
public:
  SParser(const std::string& s) : s_(s) {}

  SNode run() {
    SNode n = node();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return n;
  }

private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& m) {
    throw Error(ErrorCode::Parse, m + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  SNode node() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    SNode n;
    if (s_[pos_] == '(') {
      ++pos_;
      n.list = true;
      for (;;) {
        skip();
        if (pos_ >= s_.size()) fail("unbalanced '('");
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        n.kids.push_back(node());
      }
      return n;
    }
    if (s_[pos_] == ')') fail("unexpected ')'");
    size_t b = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    n.atom = s_.substr(b, pos_ - b);
    return n;
  }
};

bool looks_numeric(const std::string& t) {
  size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  return k < t.size() && (std::isdigit(static_cast<unsigned char>(t[k])) || t[k] == '.');
}

GaussRat number(const std::string& t) {
  if (t[0] == '+') return GaussRat::from_string(t.substr(1));
  if (t[0] == '-') return -GaussRat::from_string(t.substr(1));
  return GaussRat::from_string(t);
}

Expr build(const SNode& n, const ParseContext& ctx);

bool is_head(const SNode& n, const char* h) { return n.list && !n.kids.empty() && !n.kids[0].list && n.kids[0].atom == h; }

std::optional<Expr> factored_quotient(const SNode& num, const SNode& den, const ParseContext& ctx) {
  std::vector<const SNode*> fs;
  if (is_head(den, "*")) {
    for (size_t k = 1; k < den.kids.size(); ++k) fs.push_back(&den.kids[k]);
  } else {
    fs.push_back(&den);
  }
  std::vector<DenFactor> d;
  for (auto* f : fs) {
    int mult = 1;
    const SNode* base = f;
    if (is_head(*f, "^") && f->kids.size() == 3 && !f->kids[2].list && looks_numeric(f->kids[2].atom)) {
      base = &f->kids[1];
      try {
        mult = std::stoi(f->kids[2].atom);
      } catch (const std::exception&) {
        return std::nullopt;
      }
      if (mult < 1) return std::nullopt;
    }
    Expr b = build(*base, ctx);
    if (!b.is_polynomial() || b.is_constant()) return std::nullopt;
    d.push_back(DenFactor{b.num(), mult});
  }
  Expr nu = build(num, ctx);
  if (!nu.is_polynomial()) return std::nullopt;
  return Expr::from_parts(nu.num(), std::move(d));
}

Expr build(const SNode& n, const ParseContext& ctx) {
  if (!n.list) {
    if (looks_numeric(n.atom)) return Expr(number(n.atom));
    return name_atom(n.atom, ctx);
  }
  if (n.kids.empty() || n.kids[0].list) throw Error(ErrorCode::Parse, "list must start with an operator");
  const std::string& h = n.kids[0].atom;
  size_t argc = n.kids.size() - 1;
  auto arg = [&](size_t k) { return build(n.kids[k], ctx); };
  auto word = [&](size_t k) -> const std::string& {
    if (k >= n.kids.size() || n.kids[k].list) throw Error(ErrorCode::Parse, "'" + h + "' expects a word");
    return n.kids[k].atom;
  };
  auto need = [&](size_t c) {
    if (argc != c) throw Error(ErrorCode::Parse, "'" + h + "' expects " + std::to_string(c) + " arguments");
  };
  if (h == "+") {
    Expr s;
    for (size_t k = 1; k <= argc; ++k) s += arg(k);
    return s;
  }
  if (h == "*") {
    Expr s(1);
    for (size_t k = 1; k <= argc; ++k) s *= arg(k);
    return s;
  }
  if (h == "-") {
    if (argc == 0) throw Error(ErrorCode::Parse, "'-' needs arguments");
    if (argc == 1) return -arg(1);
    Expr s = arg(1);
    for (size_t k = 2; k <= argc; ++k) s -= arg(k);
    return s;
  }
  if (h == "/") {
    if (argc < 1) throw Error(ErrorCode::Parse, "'/' needs arguments");
    // canonical (/ num (* (^ d1 k1) d2 ...)): keep the factorization as written
    if (argc == 2) {
      if (auto e = factored_quotient(n.kids[1], n.kids[2], ctx)) return *e;
    }
    Expr s = arg(1);
    for (size_t k = 2; k <= argc; ++k) {
      Expr d = arg(k);
      if (d.is_zero()) throw Error(ErrorCode::DivisionByZeroExpr, "division by zero in input");
      s /= d;
    }
    return s;
  }
  if (h == "^") {
    need(2);
    return power(arg(1), arg(2));
  }
  if (h == "sqrt") { need(1); return Expr::sqrt(arg(1)); }
  if (h == "exp") { need(1); return Expr::exp(arg(1)); }
  if (h == "sin" || h == "cos") { need(1); return Expr::func(h, arg(1)); }
  if (h == "fn") { need(2); return Expr::func(word(1), arg(2)); }
  if (h == "par") { need(1); return Expr::param(word(1)); }
  if (h == "sym") {
    need(2);
    int order = 0;
    try {
      order = std::stoi(word(2));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad derivative order '" + word(2) + "'");
    }
    if (order < 0) throw Error(ErrorCode::Parse, "negative derivative order");
    return Expr::symbol(word(1), order);
  }
  if (h == "c") {
    need(2);
    return Expr(number(word(1)) + number(word(2)) * GaussRat::i());
  }
  throw Error(ErrorCode::Parse, "unknown operator '" + h + "'");
}

const std::set<std::string>& sexpr_heads() {
  static const std::set<std::string> h{"+", "-", "*", "/", "^", "sqrt", "exp", "sin", "cos", "fn", "par", "sym", "c"};
  return h;
}

}

Expr parse_infix(const std::string& text, const ParseContext& ctx) {
  return Infix(text, ctx).run();
}

Expr parse_sexpr(const std::string& text, const ParseContext& ctx) {
  return build(SParser(text).run(), ctx);
}

Expr parse_expr(const std::string& text, const ParseContext& ctx) {
  size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw Error(ErrorCode::Parse, "empty expression");
  if (text[b] == '(') {
    size_t h = text.find_first_not_of(" \t\r\n", b + 1);
    if (h != std::string::npos) {
      size_t e = text.find_first_of(" \t\r\n()", h);
      if (e != std::string::npos && std::isspace(static_cast<unsigned char>(text[e])) &&
          sexpr_heads().count(text.substr(h, e - h)))
        return parse_sexpr(text, ctx);
    }
  }
  return parse_infix(text, ctx);
}

}
