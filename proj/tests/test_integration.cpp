#include <doctest.h>

#include "gkmlab/integration.hpp"
#include "support.hpp"

using namespace gkmtest;

namespace {

MultiPoly other_weights(const Skeleton& s, int v, int skip) {
  MultiPoly p = C(s.dim(), 1);
  for (int e : s.out(v))
    if (e != skip) p *= MultiPoly::linear(s.edge(e).alpha);
  return p;
}

}  // namespace

TEST_CASE("integrals on the permutahedron") {
  auto g = cayley_sn(3);
  const auto& s = g.skeleton;
  auto md = canonical_morse(s, suggested_xi(g));
  CHECK(integrate(s, std::vector<MultiPoly>(6, C(2, 1))).is_zero());

  auto top = find_generating_class(s, md, s.index_of("321"));
  auto r = integrate(s, top.cls.values);
  REQUIRE(r.is_polynomial());
  CHECK(*r.as_polynomial() == C(2, 1));

  for (int m = 0; m <= 4; ++m)
    for (const auto& b : basis_H(s, m)) {
      CHECK(verify_integrality(s, b.values));
      if (m < 3) CHECK(integrate(s, b.values).is_zero());
    }

  std::vector<MultiPoly> lump(6, MultiPoly(2));
  lump[s.index_of("123")] = X(2, 0);
  auto lr = integrate(s, lump);
  CHECK(!lr.is_polynomial());
  CHECK(!verify_integrality(s, lump));
}

TEST_CASE("integral over a single edge") {
  auto s = single_edge();
  CHECK(integrate(s, {C(1, 5), C(1, 5)}).is_zero());
  auto r = integrate(s, {X(1, 0), MultiPoly(1)});
  REQUIRE(r.is_polynomial());
  CHECK(*r.as_polynomial() == C(1, 1));
}

TEST_CASE("edge Thom classes") {
  auto e = single_edge();
  auto t = edge_thom(e, 0);
  CHECK(t.values == std::vector<MultiPoly>{C(1, 1), C(1, 1)});

  auto s = cayley_sn(3).skeleton;
  int edge = edge_between(s, "123", "213");
  REQUIRE(edge >= 0);
  auto te = edge_thom(s, edge);
  auto a1 = X(2, 0), a2 = X(2, 1);
  CHECK(te.values[s.index_of("123")] == a2 * (a1 + a2));
  CHECK(te.values[s.index_of("213")] == other_weights(s, s.index_of("213"), s.edge(edge).rev));
  CHECK(is_class(s, te.values));
  for (int v = 0; v < 6; ++v)
    if (v != s.index_of("123") && v != s.index_of("213")) CHECK(te.values[v].is_zero());

  auto comps = subskeleton(s, Subspace({V({1, 0}), V({0, 1})}));
  auto whole = component_thom(s, comps[0]);
  for (const auto& v : whole.values) CHECK(v == C(2, 1));
}

TEST_CASE("pairing test against the direct class test") {
  auto g = cayley_sn(3);
  const auto& s = g.skeleton;
  auto md = canonical_morse(s, suggested_xi(g));
  auto family = generating_family(s, md);
  auto f = basis_H(s, 2)[3].values;
  auto ok = duality_test(s, family, f, 4);
  CHECK(ok.products_integral);
  CHECK(ok.is_class);
  CHECK(ok.agree);
  CHECK(ok.products_checked > 0);

  auto zero = duality_test(s, family, std::vector<MultiPoly>(6, MultiPoly(2)), 3);
  CHECK(zero.products_integral);
  CHECK(zero.agree);

  auto bad = f;
  bad[s.index_of("132")] += X(2, 0) * X(2, 0);
  auto rep = duality_test(s, family, bad, 3);
  CHECK(!rep.is_class);
  CHECK(!rep.products_integral);
  CHECK(rep.agree);
}
