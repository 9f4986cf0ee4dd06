#include "darbouxkit/serialize.hpp"

#include <algorithm>

namespace darbouxkit {

namespace {

ParseContext context_for(const std::vector<std::string>& params) {
  ParseContext c;
  c.parameters.insert(params.begin(), params.end());
  return c;
}

void collect_params(const Expr& e, std::set<std::string>& out) {
  for (AtomId a : e.atoms()) {
    const AtomData& d = atom_data(a);
    if (d.kind == AtomKind::Param) out.insert(d.name);
    else if (d.kind == AtomKind::Radical || d.kind == AtomKind::Exp || d.kind == AtomKind::Func)
      collect_params(d.arg, out);
  }
}

void collect_symbols(const Expr& e, std::set<std::string>& out) {
  for (AtomId a : e.atoms()) {
    const AtomData& d = atom_data(a);
    if (d.kind == AtomKind::Symbol) out.insert(d.name);
    else if (d.kind == AtomKind::Radical || d.kind == AtomKind::Exp || d.kind == AtomKind::Func)
      collect_symbols(d.arg, out);
  }
}

std::vector<Expr> table_exprs(const DerivationTable& t) {
  std::vector<Expr> v;
  for (auto& [k, e] : t.rules()) v.push_back(e);
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
  return j.at(key);
}

void expect_type(const json& j, const char* type) {
  if (j.is_object() && j.contains("type") && j.at("type") != type)
    throw Error(ErrorCode::InvalidArgument, std::string("expected a ") + type + " object");
}

}

json to_json(const Expr& e) { return e.sexpr(); }

Expr expr_from_json(const json& j, const std::vector<std::string>& params) {
  if (j.is_number_integer()) return Expr(j.get<long>());
  if (!j.is_string()) throw Error(ErrorCode::Parse, "expression must be a string");
  return parse_expr(j.get<std::string>(), context_for(params));
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json& j, const std::vector<std::string>& params) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidArgument, "matrix must be a nonempty array of rows");
  size_t c = j[0].is_array() ? j[0].size() : 0;
  Mat m(j.size(), c);
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != c || c == 0)
      throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    for (size_t k = 0; k < c; ++k) m(i, k) = expr_from_json(j[i][k], params);
  }
  return m;
}

json to_json(const DerivationTable& t) {
  json o = json::object();
  for (auto& [k, e] : t.rules()) o[symbol_display_name(k.first, k.second)] = to_json(e);
  for (auto& n : t.free_functions()) o[n] = nullptr;
  for (auto& n : t.constants()) o[n] = "0";
  return o;
}

DerivationTable table_from_json(const json& j, const std::vector<std::string>& params) {
  DerivationTable t;
  if (j.is_null()) return t;
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "table must be an object");
  for (auto& [k, v] : j.items()) {
    auto [name, order] = split_primes(k);
    if (v.is_null()) t.declare_free(name);
    else t.set(name, order, expr_from_json(v, params));
  }
  return t;
}

void declare_unknown_free(DerivationTable& t, const std::vector<Expr>& es) {
  std::set<std::string> names;
  for (auto& e : es) collect_symbols(e, names);
  for (auto& n : names) {
    if (t.has_rule(n, 0) || t.is_free(n) || t.is_constant(n)) continue;
    t.declare_free(n);
  }
}

std::vector<std::string> params_of(const std::vector<Expr>& es) {
  std::set<std::string> s;
  for (auto& e : es) collect_params(e, s);
  s.erase("m");
  return {s.begin(), s.end()};
}

std::vector<std::string> params_field(const json& j) {
  std::vector<std::string> v;
  if (j.is_object() && j.contains("parameters")) {
    for (auto& p : j.at("parameters")) {
      if (!p.is_string()) throw Error(ErrorCode::InvalidArgument, "parameters must be strings");
      v.push_back(p.get<std::string>());
    }
  }
  return v;
}

json to_json(const SecondOrderFamily& f) {
  auto es = table_exprs(f.table);
  for (auto* e : {&f.p, &f.q, &f.r, &f.w}) es.push_back(*e);
  json o;
  o["type"] = "family";
  o["p"] = to_json(f.p);
  o["q"] = to_json(f.q);
  o["r"] = to_json(f.r);
  o["w"] = to_json(f.w);
  o["m"] = f.m;
  o["parameters"] = params_of(es);
  o["table"] = to_json(f.table);
  return o;
}

SecondOrderFamily family_from_json(const json& j) {
  expect_type(j, "family");
  auto ps = params_field(j);
  std::string m = j.value("m", "m");
  ps.push_back(m);
  auto get = [&](const char* k, const char* dflt) {
    return j.contains(k) ? expr_from_json(j.at(k), ps) : parse_expr(dflt, context_for(ps));
  };
  Expr p = get("p", "0"), q = expr_from_json(field(j, "q"), ps), r = get("r", "1"), w = get("w", "1");
  DerivationTable t = table_from_json(j.value("table", json::object()), ps);
  declare_unknown_free(t, {p, q, r, w});
  t.validate();
  return SecondOrderFamily::make(p, q, r, w, t, m);
}

json to_json(const LinearSystem& s) {
  json o;
  o["type"] = "linear_system";
  o["n"] = s.n();
  o["convention"] = kConvention;
  o["matrix"] = to_json(s.A);
  auto es = table_exprs(s.table);
  for (size_t i = 0; i < s.A.rows(); ++i)
    for (size_t k = 0; k < s.A.cols(); ++k) es.push_back(s.A(i, k));
  o["parameters"] = params_of(es);
  o["table"] = to_json(s.table);
  return o;
}

LinearSystem system_from_json(const json& j) {
  expect_type(j, "linear_system");
  auto ps = params_field(j);
  if (j.value("convention", kConvention) != std::string(kConvention))
    throw Error(ErrorCode::InvalidArgument, "unsupported convention");
  Mat A = mat_from_json(field(j, "matrix"), ps);
  if (!A.square() || (j.contains("n") && j.at("n") != A.rows()))
    throw Error(ErrorCode::InvalidArgument, "matrix must be n x n");
  DerivationTable t = table_from_json(j.value("table", json::object()), ps);
  return LinearSystem::minus_a(A, t);
}

json to_json(const OrthogonalSystem& s) {
  json o;
  o["type"] = "orthogonal_system";
  o["f"] = to_json(s.f);
  o["g"] = to_json(s.g);
  o["h"] = to_json(s.h);
  auto es = table_exprs(s.table);
  for (auto* e : {&s.f, &s.g, &s.h}) es.push_back(*e);
  o["parameters"] = params_of(es);
  o["table"] = to_json(s.table);
  return o;
}

OrthogonalSystem orthogonal_from_json(const json& j) {
  expect_type(j, "orthogonal_system");
  auto ps = params_field(j);
  OrthogonalSystem s{expr_from_json(field(j, "f"), ps), expr_from_json(field(j, "g"), ps),
                     expr_from_json(field(j, "h"), ps), table_from_json(j.value("table", json::object()), ps)};
  declare_unknown_free(s.table, {s.f, s.g, s.h});
  return s;
}

json to_json(const CheckReport& r) {
  return json{{"type", "report"}, {"check", r.check}, {"max_residual", r.max_residual},
              {"tolerance", r.tolerance}, {"pass", r.pass}};
}

CheckReport report_from_json(const json& j) {
  expect_type(j, "report");
  CheckReport r;
  r.check = field(j, "check").get<std::string>();
  r.max_residual = field(j, "max_residual").get<double>();
  r.tolerance = field(j, "tolerance").get<double>();
  r.pass = field(j, "pass").get<bool>();
  return r;
}

json reingest(const json& j) {
  std::string t = j.value("type", "");
  if (t == "family") return to_json(family_from_json(j));
  if (t == "linear_system") return to_json(system_from_json(j));
  if (t == "orthogonal_system") return to_json(orthogonal_from_json(j));
  if (t == "report") return to_json(report_from_json(j));
  throw Error(ErrorCode::InvalidArgument, "unknown object type '" + t + "'");
}

}
