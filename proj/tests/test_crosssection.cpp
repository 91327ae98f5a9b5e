#include <doctest.h>

#include <algorithm>
#include <set>

#include "gkmlab/crosssection.hpp"
#include "gkmlab/integration.hpp"
#include "gkmlab/symfun.hpp"
#include "support.hpp"

using namespace gkmtest;

namespace {

struct World {
  CatalogGraph g;
  MorseData md;
  SliceAtlas atlas;
  explicit World(const std::string& spec, std::optional<Vec> xi = std::nullopt)
      : g(open_graph(spec)), md(canonical_morse(g.skeleton, xi ? *xi : suggested_xi(g))), atlas(build_atlas(g.skeleton, md)) {}
  const Skeleton& s() const { return g.skeleton; }
  std::vector<Rational> levels() const {
    auto phi = md.phi;
    std::sort(phi.begin(), phi.end());
    std::vector<Rational> out;
    for (std::size_t i = 0; i + 1 < phi.size(); ++i) out.push_back((phi[i] + phi[i + 1]) / 2);
    return out;
  }
};

}  // namespace

TEST_CASE("polarized basis and slopes") {
  PolarizedBasis one(V({1}));
  CHECK(one.m(V({2})) == 2);
  CHECK(one.beta(V({2})).empty());
  CHECK(one.ydim() == 0);

  World w("sn:3", V({2, 3}));
  const auto& s = w.s();
  PolarizedBasis pb(w.md.xi);
  CHECK(dot(pb.x(), pb.xi()) == 1);
  for (const auto& y : pb.y()) CHECK(dot(y, pb.xi()) == 0);
  for (int e = 0; e < s.num_edges(); ++e) {
    const Vec& a = s.edge(e).alpha;
    const Vec& ar = s.edge(s.edge(e).rev).alpha;
    CHECK(pb.m(ar) == -pb.m(a));
    CHECK(pb.beta(ar) == pb.beta(a));
    // alpha = m (x - beta)
    CHECK(a == scaled(sub(pb.x(), pb.from_y(pb.beta(a))), pb.m(a)));
  }
  for (int v = 0; v < s.num_vertices(); ++v) {
    std::set<Vec, VecLess> betas;
    for (int e : s.out(v)) betas.insert(pb.beta(s.edge(e).alpha));
    CHECK(betas.size() == s.out(v).size());
  }
  for (const auto& c : w.levels()) {
    auto cs = cross_section(s, w.md, w.atlas, c);
    for (const auto& m : cs.m) CHECK(m > 0);
  }
}

TEST_CASE("cross-sections of the permutahedron") {
  World w("sn:3");
  const auto& s = w.s();
  auto phi = w.md.phi;
  std::sort(phi.begin(), phi.end());
  auto low = cross_section(s, w.md, w.atlas, (phi[0] + phi[1]) / 2);
  CHECK(low.members.size() == 3);
  for (int e : low.members) CHECK(s.id(s.edge(e).src) == "123");
  REQUIRE(low.hyperedges.size() == 1);
  CHECK(low.hyperedges[0].members.size() == 3);
  CHECK(low.hyperedges[0].mu == 2);
  CHECK(low.valence_count_ok);

  auto below = cross_section(s, w.md, w.atlas, phi[0] - 1);
  CHECK(below.members.empty());
  CHECK_THROWS(cross_section(s, w.md, w.atlas, phi[2]));
}

TEST_CASE("Kirwan map") {
  World w("sn:3");
  const auto& s = w.s();
  auto levels = w.levels();
  for (const auto& c : levels) {
    auto cs = cross_section(s, w.md, w.atlas, c);
    auto ones = kirwan(s, cs, std::vector<MultiPoly>(6, C(2, 1)));
    for (const auto& v : ones) CHECK(v == C(cs.ydim(), 1));

    auto deg1 = basis_H(s, 1);
    for (const auto& cl : deg1) {
      auto k = kirwan(s, cs, cl.values);
      for (std::size_t pos = 0; pos < cs.members.size(); ++pos) {
        int p = s.edge(cs.members[pos]).src;
        Vec l = cl.values[p].linear_coefficients();
        Rational lx = dot(l, w.md.xi);
        Vec rest = sub(l, scaled(cs.pb.x(), lx));
        Vec expect = add(scaled(cs.beta[pos], lx), cs.pb.to_y(rest));
        CHECK(k[pos] == MultiPoly::linear(expect));
      }
    }
    for (std::size_t i = 0; i < deg1.size(); ++i)
      for (std::size_t j = i; j < deg1.size(); ++j) {
        std::vector<MultiPoly> prod;
        for (int v = 0; v < 6; ++v) prod.push_back(deg1[i].values[v] * deg1[j].values[v]);
        auto kp = kirwan(s, cs, prod);
        auto ki = kirwan(s, cs, deg1[i].values), kj = kirwan(s, cs, deg1[j].values);
        for (std::size_t pos = 0; pos < kp.size(); ++pos) CHECK(kp[pos] == ki[pos] * kj[pos]);
      }
  }
}

TEST_CASE("densities and integrals over cross-sections") {
  auto e = single_edge();
  auto emd = canonical_morse(e, V({1}));
  auto eat = build_atlas(e, emd);
  auto ecs = cross_section(e, emd, eat, (emd.phi[0] + emd.phi[1]) / 2);
  REQUIRE(ecs.members.size() == 1);
  CHECK(density(e, ecs, 0) == RationalFn(C(0, Rational(1) / ecs.m[0])));

  World w("sn:3");
  const auto& s = w.s();
  for (const auto& c : w.levels()) {
    auto cs = cross_section(s, w.md, w.atlas, c);
    for (std::size_t pos = 0; pos < cs.members.size(); ++pos) {
      int edge = cs.members[pos];
      std::vector<Vec> forms;
      for (int f : s.out(s.edge(edge).src))
        if (f != edge) forms.push_back(cs.pb.project(s.edge(f).alpha, s.edge(edge).alpha));
      CHECK(density(s, cs, pos) == RationalFn::inverse_of_product(cs.ydim(), forms, Rational(1) / cs.m[pos]));

      std::vector<MultiPoly> single(cs.members.size(), MultiPoly(cs.ydim()));
      single[pos] = X(cs.ydim(), 0) + C(cs.ydim(), 3);
      CHECK(integrate_c(s, cs, single) == density(s, cs, pos) * RationalFn(single[pos]));
    }

    std::vector<MultiPoly> thom(cs.members.size());
    for (std::size_t pos = 0; pos < cs.members.size(); ++pos) {
      auto k = kirwan(s, cs, edge_thom(s, cs.members[pos]).values);
      thom[pos] = k[pos] * cs.m[pos];
    }
    auto total = integrate_c(s, cs, thom);
    REQUIRE(total.is_polynomial());
    CHECK(*total.as_polynomial() == C(cs.ydim(), static_cast<int>(cs.members.size())));

    for (int m = 0; m <= 4; ++m)
      for (const auto& cl : basis_H(s, m)) CHECK(integrate_c(s, cs, kirwan(s, cs, cl.values)).is_polynomial());
  }
}

TEST_CASE("finite cohomology of a point set") {
  std::vector<Vec> tau{V({1, 0}), V({0, 1}), V({1, 1})};
  std::vector<MultiPoly> t;
  for (const auto& v : tau) t.push_back(MultiPoly::linear(v));
  auto e = elementary_symmetric(t);

  std::vector<MultiPoly> cubes;
  for (const auto& x : t) cubes.push_back(x.pow(3));
  auto dec = finite_coh_decompose(tau, cubes);
  CHECK(dec.member);
  CHECK(dec.crosscheck_ok);
  REQUIRE(dec.coeffs.size() == 3);
  CHECK(*dec.coeffs[2].as_polynomial() == e[1]);
  CHECK(*dec.coeffs[1].as_polynomial() == -e[2]);
  CHECK(*dec.coeffs[0].as_polynomial() == e[3]);

  auto ones = finite_coh_decompose(tau, std::vector<MultiPoly>(3, C(2, 1)));
  CHECK(ones.member);
  CHECK(*ones.coeffs[0].as_polynomial() == C(2, 1));
  CHECK(ones.coeffs[1].is_zero());
  CHECK(ones.coeffs[2].is_zero());

  auto lag = finite_coh_decompose(tau, {C(2, 1), MultiPoly(2), MultiPoly(2)});
  CHECK(!lag.member);

  // dimension: sum_{k < |Delta|} lambda_{m-k, dim W}
  for (int m = 0; m <= 5; ++m)
    CHECK(static_cast<std::uint64_t>(finite_coh_dimension(tau, m)) ==
          graded_dim(m, 2) + graded_dim(m - 1, 2) + graded_dim(m - 2, 2));
}

TEST_CASE("membership in the cross-section cohomology") {
  World w("sn:3");
  const auto& s = w.s();
  auto levels = w.levels();
  for (const auto& c : levels) {
    auto cs = cross_section(s, w.md, w.atlas, c);
    CHECK(membership_Hc(s, cs, w.atlas, std::vector<MultiPoly>(cs.members.size(), C(cs.ydim(), 1))).member);
    for (int m = 0; m <= 3; ++m) {
      auto basis = basis_H(s, m);
      for (const auto& cl : basis) {
        auto rep = membership_Hc(s, cs, w.atlas, kirwan(s, cs, cl.values));
        CHECK(rep.member);
        for (bool b : rep.per_hyperedge) CHECK(b);
      }
      CHECK(level_dimension(s, cs, w.atlas, m) == kirwan_rank(s, cs, basis, m));
    }
  }
  // lowest level: H^m = sum_{k<d} lambda_{m-k, dim g*_xi}
  auto low = cross_section(s, w.md, w.atlas, levels.front());
  for (int m = 0; m <= 4; ++m) {
    std::uint64_t expect = 0;
    for (int k = 0; k < 3; ++k) expect += graded_dim(m - k, low.ydim());
    CHECK(static_cast<std::uint64_t>(level_dimension(s, low, w.atlas, m)) == expect);
    CHECK(finite_coh_dimension(low.beta, m) == level_dimension(s, low, w.atlas, m));
  }
}

TEST_CASE("a corrupted value is detected") {
  World w("sn:3");
  const auto& s = w.s();
  auto cs = cross_section(s, w.md, w.atlas, w.levels()[2]);
  auto cl = basis_H(s, 2)[4];
  auto k = kirwan(s, cs, cl.values);
  k[1] += X(cs.ydim(), 0);
  auto rep = membership_Hc(s, cs, w.atlas, k);
  CHECK(!rep.member);
}

TEST_CASE("gamma slices") {
  World w3("sn:3");
  for (const auto& c : w3.levels()) {
    auto cs = cross_section(w3.s(), w3.md, w3.atlas, c);
    auto gs = gamma_slice(cs, V({1}));
    CHECK(gs.hyperedges.size() <= 1);
    CHECK(gs.totally_disconnected);
  }

  World w4("sn:4");
  auto phi = w4.md.phi;
  std::sort(phi.begin(), phi.end());
  auto cs = cross_section(w4.s(), w4.md, w4.atlas, (phi[11] + phi[12]) / 2);
  CHECK(gamma_slice(cs, V({1, 0})).hyperedges.size() + gamma_slice(cs, V({0, 1})).hyperedges.size() <=
        cs.hyperedges.size());
  std::set<Vec, VecLess> labels;
  for (const auto& E : cs.hyperedges) labels.insert(primitive(E.label_y));
  bool some_shared = false;
  for (const auto& l : labels) {
    auto gs = gamma_slice(cs, l);
    some_shared = some_shared || gs.hyperedges.size() > 1;
    // oracle: pairwise intersection scan
    bool disjoint = true;
    for (std::size_t a = 0; a < gs.hyperedges.size(); ++a)
      for (std::size_t b = a + 1; b < gs.hyperedges.size(); ++b) {
        const auto& A = cs.hyperedges[gs.hyperedges[a]].members;
        const auto& B = cs.hyperedges[gs.hyperedges[b]].members;
        for (int x : A) disjoint = disjoint && std::find(B.begin(), B.end(), x) == B.end();
      }
    CHECK(gs.totally_disconnected == disjoint);
    CHECK(gs.totally_disconnected);
  }
  CHECK(some_shared);
  Vec odd = V({1, 1});
  bool parallel_any = false;
  for (const auto& E : cs.hyperedges) parallel_any = parallel_any || parallel(E.label_y, odd);
  if (!parallel_any) CHECK(gamma_slice(cs, odd).hyperedges.empty());
}
