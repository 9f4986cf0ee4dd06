#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "darbouxkit/errors.hpp"
#include "darbouxkit/gaussrat.hpp"

namespace darbouxkit {

using AtomId = std::uint32_t;
using cplx = std::complex<double>;

// Sparse power product of atoms, sorted by atom id.
struct Monomial {
  std::vector<std::pair<AtomId, int>> f;
  int degree() const;
  bool empty() const { return f.empty(); }
  int exponent(AtomId a) const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f == b.f; }
};

// Graded lex, greatest first.
struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial over Q(i) in the atoms. Radical atoms appear with exponent <= 1
// and at most one exp atom appears per monomial; multiplication keeps this.
class Poly {
public:
  using Terms = std::map<Monomial, GaussRat, MonomialGreater>;

  Poly() = default;
  Poly(const GaussRat& c);
  static Poly atom(AtomId a, int e = 1);
  static Poly term(const Monomial& m, const GaussRat& c);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  GaussRat constant() const; // constant term
  const Monomial& lead_monomial() const { return t_.begin()->first; }
  const GaussRat& lead_coeff() const { return t_.begin()->second; }
  std::set<AtomId> atoms() const;
  bool contains(AtomId a) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const GaussRat& c) const;
  Poly pow(int n) const;
  friend bool operator==(const Poly& a, const Poly& b);

  // d/d(atom) treating every other atom as independent
  Poly partial(AtomId a) const;
  // image under s -> -s for a radical atom s
  Poly flip_radical(AtomId s) const;

  // exact division; false if no exact polynomial quotient was found
  static bool divide(const Poly& n, const Poly& d, Poly& q);

  void add_term(const Monomial& m, const GaussRat& c);

private:
  Terms t_;
};

struct DenFactor {
  Poly p;   // monic, non-constant, free of radicals and exp atoms content
  int mult; // >= 1
};

// Rational function in normal form: num / prod(den_i^mult_i).
// All arithmetic normalizes eagerly, so every Expr value is already normalized.
class Expr {
public:
  Expr();
  Expr(long n);
  Expr(const GaussRat& c);
  explicit Expr(const Poly& p);

  static Expr x();
  static Expr imag();
  static Expr param(const std::string& name);
  static Expr symbol(const std::string& name, int order = 0);
  // symbol from display form: "y1", "y1'", "w''"
  static Expr symbol_display(const std::string& display);
  static Expr sqrt(const Expr& radicand);
  static Expr exp(const Expr& arg);
  static Expr func(const std::string& name, const Expr& arg); // sin, cos
  static Expr rational(long n, long d);
  static Expr from_parts(Poly num, std::vector<DenFactor> den); // normalizes

  const Poly& num() const;
  const std::vector<DenFactor>& den() const;

  bool is_zero() const { return num().is_zero(); }
  bool is_constant() const;
  std::optional<GaussRat> constant_value() const;
  bool is_polynomial() const { return den().empty(); }
  // true if some atom can vary with x (x itself, symbols, or wrappers around them)
  bool depends_on_x() const;
  bool depends_on(const std::string& name) const;
  std::set<AtomId> atoms() const; // direct atoms, numerator and denominator
  // every parameter / symbol name reachable, symbols in display form
  std::set<std::string> free_names() const;

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o);
  Expr& operator/=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(Expr a, const Expr& b) { return a *= b; }
  friend Expr operator/(Expr a, const Expr& b) { return a /= b; }
  Expr inverse() const;
  Expr pow(int n) const;

  // semantic equality: the difference is exactly zero
  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  std::string sexpr() const;
  std::string infix() const;

private:
  struct Rep;
  explicit Expr(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
  std::shared_ptr<const Rep> rep_;
  friend struct ExprAccess;
};

enum class AtomKind : std::uint8_t { Var, Param, Symbol, Radical, Exp, Func };

struct AtomData {
  AtomKind kind;
  std::string name; // parameter, symbol base name, or function name
  int order = 0;    // derivative order for symbols
  Expr arg;         // radicand (polynomial), exponent, or function argument
  std::string display;
};

const AtomData& atom_data(AtomId a);
std::string symbol_display_name(const std::string& name, int order);
// splits "y1''" into ("y1", 2)
std::pair<std::string, int> split_primes(const std::string& display);

// Derivative rules for symbols. Parameters always differentiate to zero.
class DerivationTable {
public:
  // rule d/dx (name with `order` primes) = e
  void set(const std::string& name, int order, const Expr& e);
  // display form key, e.g. set("y1'", ...)
  void set(const std::string& display, const Expr& e);
  // derivatives are fresh symbols name', name'', ...
  void declare_free(const std::string& name);
  // symbol with zero derivative
  void declare_constant(const std::string& name);
  // second-order rewrite y'' = -p y' - c y, i.e. rules y -> y' and y' -> ...
  void add_second_order(const std::string& y, const Expr& p, const Expr& c);
  void merge(const DerivationTable& o); // entries of o win on conflict

  bool has_rule(const std::string& name, int order) const;
  bool is_free(const std::string& name) const { return free_.count(name) > 0; }
  bool is_constant(const std::string& name) const { return const_.count(name) > 0; }
  // derivative of a symbol atom; throws UnknownSymbol
  Expr symbol_derivative(const std::string& name, int order) const;
  // checks every symbol referenced by a rule is itself derivable
  void validate() const;

  const std::map<std::pair<std::string, int>, Expr>& rules() const { return rules_; }
  const std::set<std::string>& free_functions() const { return free_; }
  const std::set<std::string>& constants() const { return const_; }

private:
  std::map<std::pair<std::string, int>, Expr> rules_;
  std::set<std::string> free_;
  std::set<std::string> const_;
};

Expr differentiate(const Expr& e, const DerivationTable& table);
Expr differentiate(const Expr& e, const DerivationTable& table, int times);

// Identity on values; kept for API symmetry with tree-based kernels.
inline const Expr& normalize(const Expr& e) { return e; }

// Simultaneous substitution. Keys are parameter names or symbol base names;
// derivative atoms of a substituted symbol become derivatives of its image,
// computed with `table`. Display keys like "y1'" replace that atom only.
Expr substitute(const Expr& e, const std::map<std::string, Expr>& map,
                const DerivationTable& table = {});

using Bindings = std::map<std::string, cplx>;

// Keys: "x", parameter names, symbol display names, optionally display names
// of radicals/exps to override the principal branch.
cplx evaluate(const Expr& e, const Bindings& b);

// Compiled form for repeated numeric evaluation.
class NumericExpr {
public:
  NumericExpr() = default;
  // slot_names: names whose values are passed per call, in this order
  NumericExpr(const Expr& e, const std::vector<std::string>& slot_names,
              const Bindings& fixed = {});
  cplx operator()(cplx x, const cplx* slots) const;

  struct Node; // implementation detail

private:
  std::shared_ptr<const Node> root_;
};

struct ParseContext {
  std::set<std::string> parameters{"m"};
};

// Accepts infix ("x^2 - 2*i*y1'") and canonical S-expressions.
Expr parse_expr(const std::string& text, const ParseContext& ctx = {});
Expr parse_infix(const std::string& text, const ParseContext& ctx = {});
Expr parse_sexpr(const std::string& text, const ParseContext& ctx = {});

// Physicists' Hermite polynomial, expanded.
Expr hermite(int n);

}
