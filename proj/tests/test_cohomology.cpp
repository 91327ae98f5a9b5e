#include <doctest.h>

#include "gkmlab/cohomology.hpp"
#include "gkmlab/linalg.hpp"
#include "support.hpp"

using namespace gkmtest;

namespace {

struct Setup {
  CatalogGraph g;
  MorseData md;
  explicit Setup(const std::string& spec) : g(open_graph(spec)), md(canonical_morse(g.skeleton, suggested_xi(g))) {}
  const Skeleton& s() const { return g.skeleton; }
};

std::vector<MultiPoly> column(const Skeleton& s, std::initializer_list<std::pair<const char*, MultiPoly>> entries) {
  std::vector<MultiPoly> out(s.num_vertices(), MultiPoly(s.dim()));
  for (const auto& [id, p] : entries) out[s.index_of(id)] = p;
  return out;
}

}  // namespace

TEST_CASE("class membership") {
  Setup S("sn:3");
  const auto& s = S.s();
  auto a1 = X(2, 0), a2 = X(2, 1);
  CHECK(is_class(s, std::vector<MultiPoly>(6, C(2, 1))));
  auto tau12 = column(s, {{"213", -a1}, {"231", -a1 - a2}, {"312", -a1}, {"321", -a1 - a2}});
  CHECK(is_class(s, tau12));

  auto e = Skeleton::from_unoriented(SpaceCtx::standard(2, "a"), {"p", "q"}, {{"p", "q", V({0, 1})}});
  std::vector<MultiPoly> bad{a1, MultiPoly(2)};
  CHECK(!is_class(e, bad));
  CHECK(class_violation(e, bad).has_value());
}

TEST_CASE("degree-one classes on the permutahedron: independent elimination") {
  Setup S("sn:3");
  const auto& s = S.s();
  // unknowns (f_v)_0, (f_v)_1; constraint per edge: (f_p - f_q) parallel to alpha
  std::vector<Vec> rows;
  for (int e : s.unoriented()) {
    const auto& ed = s.edge(e);
    Vec r(12);
    r[2 * ed.src] += ed.alpha[1];
    r[2 * ed.src + 1] -= ed.alpha[0];
    r[2 * ed.dst] -= ed.alpha[1];
    r[2 * ed.dst + 1] += ed.alpha[0];
    rows.push_back(r);
  }
  CHECK(nullspace(rows, 12).dim == 4);
  CHECK(dim_H(s, 1) == 4);
}

TEST_CASE("graded dimensions of H") {
  Setup S("sn:3");
  CHECK(dim_H(S.s(), 0) == 1);
  CHECK(dim_H(S.s(), 1) == 4);
  CHECK(dim_H(S.s(), 3) == 15);
  for (int m = 0; m <= 3; ++m) {
    auto basis = basis_H(S.s(), m);
    CHECK(static_cast<int>(basis.size()) == dim_H(S.s(), m));
    MonomialIndex idx(S.s().dim(), m);
    std::vector<Vec> flat;
    for (const auto& b : basis) {
      CHECK(is_class(S.s(), b.values));
      flat.push_back(idx.flatten(b.values));
    }
    CHECK(rank_of(flat) == static_cast<int>(basis.size()));
  }
  CHECK(betti_formula({1, 2, 2, 1}, 3, 2) == 15);
}

TEST_CASE("generating classes of the permutahedron") {
  Setup S("sn:3");
  const auto& s = S.s();
  auto a1 = X(2, 0), a2 = X(2, 1);
  auto t231 = find_generating_class(s, S.md, s.index_of("231"));
  REQUIRE(t231.found);
  CHECK(t231.unique);
  CHECK(t231.cls.values == column(s, {{"231", a2 * (a1 + a2)}, {"321", a2 * (a1 + a2)}}));

  auto t1 = find_generating_class(s, S.md, s.index_of("123"));
  REQUIRE(t1.found);
  CHECK(t1.cls.values == std::vector<MultiPoly>(6, C(2, 1)));

  auto top = find_generating_class(s, S.md, s.index_of("321"));
  REQUIRE(top.found);
  CHECK(top.cls.values == column(s, {{"321", -a1 * a2 * (a1 + a2)}}));

  auto t12 = find_generating_class(s, S.md, s.index_of("213"));
  CHECK(t12.cls.values == column(s, {{"213", -a1}, {"231", -a1 - a2}, {"312", -a1}, {"321", -a1 - a2}}));

  auto family = generating_family(s, S.md);
  CHECK(family.size() == 6);
  CHECK(family_complete(family));
  for (const auto& f : family) {
    CHECK(f.sharpening);
    CHECK(f.cls.values[f.vertex] == downward_product(s, S.md, f.vertex));
    CHECK(is_class(s, f.cls.values));
  }
}

TEST_CASE("Morse package") {
  Setup S("sn:3");
  auto rep = check_morse_package(S.s(), S.md, 4);
  CHECK(rep.verdict);
  std::vector<int> dims;
  for (const auto& d : rep.degrees) dims.push_back(d.dim_h);
  CHECK(dims == std::vector<int>{1, 4, 9, 15, 21});

  Setup J("johnson:3,2");
  auto fam = generating_family(J.s(), J.md);
  CHECK(family_complete(fam));
  auto jr = check_morse_package(J.s(), J.md, 5);
  CHECK(jr.verdict);
  int n = J.s().dim();
  for (const auto& d : jr.degrees)
    CHECK(static_cast<std::uint64_t>(d.dim_h) == graded_dim(d.m, n) + graded_dim(d.m - 1, n) + graded_dim(d.m - 2, n));

  auto e = single_edge();
  auto emd = canonical_morse(e, V({1}));
  auto er = check_morse_package(e, emd, 4);
  CHECK(er.verdict);
  for (const auto& d : er.degrees)
    CHECK(static_cast<std::uint64_t>(d.dim_h) == graded_dim(d.m, 1) + graded_dim(d.m - 1, 1));
}

TEST_CASE("restriction to affine planes") {
  Setup S("sn:3");
  const auto& s = S.s();
  Subspace full({V({1, 0}), V({0, 1})});
  auto comps = subskeleton(s, full);
  REQUIRE(comps.size() == 1);
  std::vector<MultiPoly> ones(6, C(2, 1));
  auto r1 = restrict_sharp(comps[0], full, ones, Vec(2));
  for (const auto& v : r1) CHECK(v == C(2, 1));
  auto tau = find_generating_class(s, S.md, s.index_of("231")).cls;
  CHECK(restrict_sharp(comps[0], full, tau.values, Vec(2)) == tau.values);
}

TEST_CASE("induced generating classes on hexagons of S4") {
  Setup S("sn:4");
  const auto& s = S.s();
  Subspace h({V({1, 0, 0}), V({0, 1, 0})});
  auto comps = subskeleton(s, h);
  auto family = generating_family(s, S.md);
  int degree_one = 0, minima = 0;
  int compared = 0;
  for (const auto& comp : comps) {
    auto direct = analyze_slice_component(comp, h, S.md.xi, 1);
    for (std::size_t lv = 0; lv < comp.parent_vertex.size(); ++lv) {
      int p = comp.parent_vertex[lv];
      auto ic = induced_generating_class(s, S.md, family[p].cls, p, h, comp);
      CHECK(ic.ok());
      if (direct.xi_reused && direct.family[lv].unique) {
        CHECK(ic.values == direct.family[lv].cls.values);
        ++compared;
      }
      int down_in_h = 0;
      for (int e : s.out(p)) down_in_h += !S.md.up[e] && h.contains(s.edge(e).alpha);
      CHECK(ic.degree == down_in_h);
      if (down_in_h == 0) {
        ++minima;
        for (const auto& v : ic.values) CHECK(v == C(2, 1));
      }
      if (down_in_h == 1) ++degree_one;
    }
  }
  CHECK(minima == 4);
  CHECK(degree_one == 8);
  CHECK(compared > 0);
}

TEST_CASE("two-dimensional reduction") {
  Setup S3("sn:3");
  auto r3 = two_dim_reduction_check(S3.s(), S3.md);
  CHECK(r3.slices.size() == 1);
  CHECK(r3.consistent);
  CHECK(r3.full_pass);

  for (const char* spec : {"sn:4", "johnson:4,2"}) {
    Setup S(spec);
    auto r = two_dim_reduction_check(S.s(), S.md);
    CHECK(r.slices_pass);
    CHECK(r.full_pass);
    CHECK(r.consistent);
    for (const auto& sl : r.slices)
      for (const auto& c : sl.components) CHECK(c.passes);
  }
}
