#pragma once

#include <optional>

#include "darbouxkit/expr.hpp"

namespace darbouxkit::detail {

AtomId intern_atom(AtomKind kind, const std::string& name, int order, const Expr& arg);
AtomId var_atom();
bool is_radical(AtomId a);
bool is_exp(AtomId a);
// exp(u)*exp(v) -> exp(u+v); nullopt when u+v is zero
std::optional<AtomId> merge_exp(AtomId a, AtomId b);
// exp(u) -> exp(-u)
AtomId negate_exp(AtomId a);
const Poly& radicand(AtomId s);

}

namespace darbouxkit {

struct ExprAccess {
  // caller guarantees (num, den) is already in normal form
  static Expr trusted(Poly num, std::vector<DenFactor> den);
};

}
