#pragma once

#include <random>
#include <string>
#include <vector>

#include "gkmlab/catalog.hpp"
#include "gkmlab/polyring.hpp"

namespace gkmtest {

using namespace gkm;

inline MultiPoly X(int n, int i) { return MultiPoly::variable(n, i); }
inline MultiPoly C(int n, const Rational& c) { return MultiPoly::constant(n, c); }

inline Vec V(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

inline Rational Q(const std::string& s) { return parse_rational(s); }

inline int edge_between(const Skeleton& s, const std::string& a, const std::string& b) {
  int u = s.index_of(a), v = s.index_of(b);
  for (int e : s.out(u))
    if (s.edge(e).dst == v) return e;
  return -1;
}

inline MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-6, 6), deg(0, max_degree), var(0, nvars - 1);
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) ++m.exp[var(rng)];
    p.add_term(m, coeff(rng));
  }
  return p;
}

inline Vec random_vec(std::mt19937_64& rng, int n, int bound = 5) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Vec v;
  for (int i = 0; i < n; ++i) v.emplace_back(d(rng));
  return v;
}

/// Triangle with weights u on a->b, v on b->c, w on c->a.
inline Skeleton triangle(const Vec& u, const Vec& v, const Vec& w) {
  SpaceCtx ctx = SpaceCtx::standard(static_cast<int>(u.size()), "a");
  return Skeleton::from_unoriented(ctx, {"a", "b", "c"}, {{"a", "b", u}, {"b", "c", v}, {"c", "a", w}});
}

inline Skeleton single_edge() {
  return Skeleton::from_unoriented(SpaceCtx::standard(1, "a"), {"p", "q"}, {{"p", "q", V({1})}});
}

}  // namespace gkmtest
