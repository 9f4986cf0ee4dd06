#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <unordered_map>

#include "internal.hpp"

namespace darbouxkit {

// ---- atom table ----

namespace {

constexpr size_t kChunk = 1024;
constexpr size_t kMaxChunks = 4096;

struct AtomTable {
  std::mutex mu;
  std::array<std::atomic<AtomData*>, kMaxChunks> chunks{};
  std::atomic<size_t> count{0};
  std::unordered_map<std::string, AtomId> by_key;
  std::unordered_map<AtomId, Poly> radicands;
  std::map<std::pair<AtomId, AtomId>, std::optional<AtomId>> exp_merges;
  std::unordered_map<AtomId, AtomId> exp_neg;
};

AtomTable& table() {
  static AtomTable* t = new AtomTable; // never destroyed: atoms outlive statics
  return *t;
}

std::string atom_key(AtomKind kind, const std::string& name, int order, const Expr& arg) {
  std::string k = std::to_string(static_cast<int>(kind)) + "|" + name + "|" + std::to_string(order);
  if (kind == AtomKind::Radical || kind == AtomKind::Exp || kind == AtomKind::Func)
    k += "|" + arg.sexpr();
  return k;
}

std::string make_display(AtomKind kind, const std::string& name, int order, const Expr& arg) {
  switch (kind) {
    case AtomKind::Var: return "x";
    case AtomKind::Param: return name;
    case AtomKind::Symbol: return symbol_display_name(name, order);
    case AtomKind::Radical: return "sqrt(" + arg.infix() + ")";
    case AtomKind::Exp: return "exp(" + arg.infix() + ")";
    case AtomKind::Func: return name + "(" + arg.infix() + ")";
  }
  return name;
}

}

const AtomData& atom_data(AtomId a) {
  auto& t = table();
  AtomData* chunk = t.chunks[a / kChunk].load(std::memory_order_acquire);
  return chunk[a % kChunk];
}

std::string symbol_display_name(const std::string& name, int order) {
  return name + std::string(static_cast<size_t>(order), '\'');
}

std::pair<std::string, int> split_primes(const std::string& display) {
  size_t e = display.size();
  while (e > 0 && display[e - 1] == '\'') --e;
  return {display.substr(0, e), static_cast<int>(display.size() - e)};
}

namespace detail {

AtomId intern_atom(AtomKind kind, const std::string& name, int order, const Expr& arg) {
  std::string key = atom_key(kind, name, order, arg);
  auto& t = table();
  {
    std::lock_guard<std::mutex> lk(t.mu);
    auto it = t.by_key.find(key);
    if (it != t.by_key.end()) return it->second;
  }
  // display needs printing, which may intern nothing new; compute outside the lock
  std::string disp = make_display(kind, name, order, arg);
  Poly rad;
  if (kind == AtomKind::Radical) rad = arg.num();
  std::lock_guard<std::mutex> lk(t.mu);
  auto it = t.by_key.find(key);
  if (it != t.by_key.end()) return it->second;
  size_t id = t.count.load();
  if (id >= kChunk * kMaxChunks) throw Error(ErrorCode::Internal, "atom table full");
  size_t c = id / kChunk;
  AtomData* chunk = t.chunks[c].load();
  if (!chunk) {
    chunk = new AtomData[kChunk];
    t.chunks[c].store(chunk, std::memory_order_release);
  }
  chunk[id % kChunk] = AtomData{kind, name, order, arg, disp};
  t.by_key.emplace(key, static_cast<AtomId>(id));
  if (kind == AtomKind::Radical) t.radicands.emplace(static_cast<AtomId>(id), std::move(rad));
  t.count.store(id + 1, std::memory_order_release);
  return static_cast<AtomId>(id);
}

AtomId var_atom() {
  static AtomId v = intern_atom(AtomKind::Var, "x", 0, Expr());
  return v;
}

bool is_radical(AtomId a) { return atom_data(a).kind == AtomKind::Radical; }
bool is_exp(AtomId a) { return atom_data(a).kind == AtomKind::Exp; }

const Poly& radicand(AtomId s) {
  auto& t = table();
  std::lock_guard<std::mutex> lk(t.mu);
  return t.radicands.at(s);
}

std::optional<AtomId> merge_exp(AtomId a, AtomId b) {
  if (a > b) std::swap(a, b);
  auto& t = table();
  {
    std::lock_guard<std::mutex> lk(t.mu);
    auto it = t.exp_merges.find({a, b});
    if (it != t.exp_merges.end()) return it->second;
  }
  Expr s = atom_data(a).arg + atom_data(b).arg;
  std::optional<AtomId> r;
  if (!s.is_zero()) r = intern_atom(AtomKind::Exp, "exp", 0, s);
  std::lock_guard<std::mutex> lk(t.mu);
  t.exp_merges[{a, b}] = r;
  return r;
}

AtomId negate_exp(AtomId a) {
  auto& t = table();
  {
    std::lock_guard<std::mutex> lk(t.mu);
    auto it = t.exp_neg.find(a);
    if (it != t.exp_neg.end()) return it->second;
  }
  AtomId r = intern_atom(AtomKind::Exp, "exp", 0, -atom_data(a).arg);
  std::lock_guard<std::mutex> lk(t.mu);
  t.exp_neg[a] = r;
  return r;
}

}

// ---- monomials ----

int Monomial::degree() const {
  int d = 0;
  for (auto& [a, e] : f) d += e;
  return d;
}

int Monomial::exponent(AtomId a) const {
  for (auto& [b, e] : f)
    if (b == a) return e;
  return 0;
}

bool MonomialGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  size_t i = 0;
  for (; i < a.f.size() && i < b.f.size(); ++i) {
    if (a.f[i].first != b.f[i].first) return a.f[i].first < b.f[i].first;
    if (a.f[i].second != b.f[i].second) return a.f[i].second > b.f[i].second;
  }
  return i < a.f.size() && i == b.f.size();
}

// ---- polynomials ----

Poly::Poly(const GaussRat& c) {
  if (!c.is_zero()) t_.emplace(Monomial{}, c);
}

Poly Poly::atom(AtomId a, int e) {
  Poly p;
  if (e == 0) return Poly(GaussRat(1));
  if (detail::is_radical(a) && e >= 2) {
    Poly base = e % 2 ? Poly::atom(a, 1) : Poly(GaussRat(1));
    return base * detail::radicand(a).pow(e / 2);
  }
  if (detail::is_exp(a) && e != 1) {
    Poly r(GaussRat(1));
    for (int k = 0; k < e; ++k) r = r * Poly::atom(a, 1);
    return r;
  }
  p.t_.emplace(Monomial{{{a, e}}}, GaussRat(1));
  return p;
}

Poly Poly::term(const Monomial& m, const GaussRat& c) {
  Poly p;
  if (!c.is_zero()) p.t_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

GaussRat Poly::constant() const {
  auto it = t_.find(Monomial{});
  return it == t_.end() ? GaussRat(0) : it->second;
}

std::set<AtomId> Poly::atoms() const {
  std::set<AtomId> s;
  for (auto& [m, c] : t_)
    for (auto& [a, e] : m.f) s.insert(a);
  return s;
}

bool Poly::contains(AtomId a) const {
  for (auto& [m, c] : t_)
    if (m.exponent(a)) return true;
  return false;
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly Poly::scaled(const GaussRat& c) const {
  if (c.is_zero()) return {};
  Poly r = *this;
  for (auto& [m, v] : r.t_) v *= c;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto i = a.t_.begin();
  auto j = b.t_.begin();
  for (; i != a.t_.end(); ++i, ++j)
    if (!(i->first == j->first) || i->second != j->second) return false;
  return true;
}

namespace {

// Raw product of two monomials; exp atoms merged, radicals may exceed 1.
// Returns false if the merged exp cancels to 1 (handled by dropping the atom).
Monomial raw_product(const Monomial& a, const Monomial& b, bool& needs_radical) {
  Monomial m;
  m.f.reserve(a.f.size() + b.f.size());
  size_t i = 0, j = 0;
  std::optional<AtomId> ea, eb;
  auto push = [&](AtomId x, int e) {
    if (detail::is_exp(x)) {
      (ea ? eb : ea) = x;
      return;
    }
    if (e >= 2 && detail::is_radical(x)) needs_radical = true;
    m.f.emplace_back(x, e);
  };
  while (i < a.f.size() || j < b.f.size()) {
    if (j == b.f.size() || (i < a.f.size() && a.f[i].first < b.f[j].first)) {
      push(a.f[i].first, a.f[i].second);
      ++i;
    } else if (i == a.f.size() || b.f[j].first < a.f[i].first) {
      push(b.f[j].first, b.f[j].second);
      ++j;
    } else {
      int e = a.f[i].second + b.f[j].second;
      if (detail::is_exp(a.f[i].first)) {
        push(a.f[i].first, 1);
        push(b.f[j].first, 1);
      } else {
        push(a.f[i].first, e);
      }
      ++i;
      ++j;
    }
  }
  std::optional<AtomId> ex = ea;
  if (ea && eb) ex = detail::merge_exp(*ea, *eb);
  if (ex) {
    auto pos = std::lower_bound(m.f.begin(), m.f.end(), std::make_pair(*ex, 0));
    m.f.insert(pos, {*ex, 1});
  }
  return m;
}

}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<std::pair<Monomial, GaussRat>> deferred;
  for (auto& [ma, ca] : a.t_) {
    for (auto& [mb, cb] : b.t_) {
      bool rad = false;
      Monomial m = raw_product(ma, mb, rad);
      GaussRat c = ca * cb;
      if (rad) deferred.emplace_back(std::move(m), std::move(c));
      else out.add_term(m, c);
    }
  }
  for (auto& [m, c] : deferred) {
    Monomial base;
    Poly factor(GaussRat(1));
    for (auto& [x, e] : m.f) {
      if (detail::is_radical(x) && e >= 2) {
        if (e % 2) base.f.emplace_back(x, 1);
        factor = factor * detail::radicand(x).pow(e / 2);
      } else {
        base.f.emplace_back(x, e);
      }
    }
    out += Poly::term(base, c) * factor;
  }
  return out;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw Error(ErrorCode::Internal, "negative polynomial power");
  Poly r(GaussRat(1)), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Poly Poly::partial(AtomId a) const {
  Poly r;
  for (auto& [m, c] : t_) {
    int e = m.exponent(a);
    if (!e) continue;
    Monomial q;
    for (auto& [x, k] : m.f) {
      if (x != a) q.f.emplace_back(x, k);
      else if (k > 1) q.f.emplace_back(x, k - 1);
    }
    r.add_term(q, c * GaussRat(e));
  }
  return r;
}

Poly Poly::flip_radical(AtomId s) const {
  Poly r;
  for (auto& [m, c] : t_) r.add_term(m, m.exponent(s) % 2 ? -c : c);
  return r;
}

namespace {

bool monomial_divides(const Monomial& d, const Monomial& n, Monomial& q) {
  q.f.clear();
  size_t j = 0;
  for (auto& [a, e] : d.f) {
    while (j < n.f.size() && n.f[j].first < a) q.f.push_back(n.f[j++]);
    if (j == n.f.size() || n.f[j].first != a || n.f[j].second < e) return false;
    if (n.f[j].second > e) q.f.emplace_back(a, n.f[j].second - e);
    ++j;
  }
  while (j < n.f.size()) q.f.push_back(n.f[j++]);
  return true;
}

}

bool Poly::divide(const Poly& n, const Poly& d, Poly& q) {
  q = Poly();
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZeroExpr, "polynomial division by zero");
  if (n.is_zero()) return true;
  if (d.is_constant()) {
    q = n.scaled(GaussRat(1) / d.constant());
    return true;
  }
  const Monomial& ld = d.lead_monomial();
  GaussRat lc_inv = GaussRat(1) / d.lead_coeff();
  Poly r = n;
  size_t budget = 64 + 8 * (n.t_.size() + 1) * (d.t_.size() + 1);
  const size_t size_cap = 8 * (n.t_.size() + d.t_.size()) + 256;
  Monomial t;
  while (!r.is_zero()) {
    if (budget-- == 0 || r.t_.size() > size_cap) return false;
    const Monomial& lr = r.lead_monomial();
    if (!monomial_divides(ld, lr, t)) return false;
    GaussRat c = r.lead_coeff() * lc_inv;
    Monomial before = lr;
    Poly step = Poly::term(t, c);
    q += step;
    r -= step * d;
    if (!r.is_zero() && r.lead_monomial() == before) return false;
  }
  return true;
}

}
