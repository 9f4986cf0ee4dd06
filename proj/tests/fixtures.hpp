#pragma once

#include <random>

#include "darbouxkit/linsys.hpp"

namespace fixtures {

using namespace darbouxkit;

inline Expr S(const char* n) { return Expr::symbol(n); }

// p, q, r free; w' = p w
inline SecondOrderFamily generic_family() {
  DerivationTable t;
  for (auto n : {"p", "q", "r"}) t.declare_free(n);
  t.set("w", 0, S("p") * S("w"));
  return SecondOrderFamily::make(S("p"), S("q"), S("r"), S("w"), t);
}

inline SecondOrderFamily explicit_family(const char* p, const char* q, const char* r, const char* w) {
  return SecondOrderFamily::make(parse_expr(p), parse_expr(q), parse_expr(r), parse_expr(w), {});
}

inline Expr random_entry(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  return Expr(GaussRat(mpq_class(d(rng)), mpq_class(d(rng) / 2)));
}

inline Mat random_mat(std::mt19937& rng, size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = random_entry(rng);
  return m;
}

}
