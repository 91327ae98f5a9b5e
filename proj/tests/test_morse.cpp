#include <doctest.h>

#include <algorithm>

#include "gkmlab/error.hpp"
#include "gkmlab/morse.hpp"
#include "support.hpp"

using namespace gkmtest;

namespace {

bool generic_oracle(const Skeleton& s, const Vec& xi) {
  for (int v = 0; v < s.num_vertices(); ++v) {
    const auto& o = s.out(v);
    auto n = [&](int e) { return scaled(s.edge(e).alpha, 1 / dot(s.edge(e).alpha, xi)); };
    for (int e1 : o)
      for (int e2 : o)
        for (int e3 : o)
          for (int e4 : o) {
            if (e1 == e2 || e3 == e4 || (e1 == e3 && e2 == e4)) continue;
            if (sub(n(e1), n(e2)) == sub(n(e3), n(e4))) return false;
          }
  }
  return true;
}

// vertices q adjacent to p with smaller phi
std::vector<int> index_oracle(const Skeleton& s, const MorseData& md) {
  std::vector<int> out;
  for (int v = 0; v < s.num_vertices(); ++v) {
    int k = 0;
    for (int e : s.out(v)) k += md.phi[s.edge(e).dst] < md.phi[v];
    out.push_back(k);
  }
  return out;
}

}  // namespace

TEST_CASE("polarizing vectors") {
  auto s = cayley_sn(3).skeleton;
  CHECK(is_polarizing(s, V({2, 3})).ok);
  CHECK(!is_polarizing(s, V({0, 0})).ok);
  auto p = is_polarizing(s, V({0, 1}));
  CHECK(!p.ok);
  REQUIRE(p.edge >= 0);
  CHECK(dot(s.edge(p.edge).alpha, V({0, 1})) == 0);
  CHECK_THROWS_AS(is_generic(s, V({0, 1})), PreconditionError);
}

TEST_CASE("genericity agrees with the exhaustive quadruple scan") {
  auto s3 = cayley_sn(3).skeleton;
  CHECK(is_generic(s3, V({2, 3})).ok == generic_oracle(s3, V({2, 3})));
  auto s4 = cayley_sn(4).skeleton;
  std::mt19937_64 rng(21);
  int seen_false = 0;
  for (int t = 0; t < 40; ++t) {
    Vec xi = random_vec(rng, 3, 6);
    if (!is_polarizing(s4, xi).ok) continue;
    bool g = is_generic(s4, xi).ok;
    CHECK(g == generic_oracle(s4, xi));
    seen_false += !g;
  }
  CHECK(seen_false > 0);

  SpaceCtx ctx = SpaceCtx::standard(3, "a");
  auto star = Skeleton::from_unoriented(ctx, {"p", "q1", "q2", "q3", "q4"},
                                        {{"p", "q1", V({1, 0, 0})},
                                         {"p", "q2", V({0, 1, 0})},
                                         {"p", "q3", V({0, 0, 1})},
                                         {"p", "q4", V({-1, 1, 1})}});
  auto g = is_generic(star, V({1, 1, 1}));
  CHECK(!g.ok);
  CHECK(star.id(g.vertex) == "p");
}

TEST_CASE("orientation and acyclicity") {
  auto s = cayley_sn(3).skeleton;
  auto o = orient_and_check_acyclic(s, V({1, 2}));
  CHECK(o.acyclic);
  for (int e = 0; e < s.num_edges(); ++e) CHECK(o.up[e] != o.up[s.edge(e).rev]);

  auto cyc = triangle(V({1, 0}), V({0, 1}), V({1, 1}));
  auto oc = orient_and_check_acyclic(cyc, V({1, 1}));
  CHECK(!oc.acyclic);
  CHECK(oc.cycle.size() == 3);

  CHECK(orient_and_check_acyclic(single_edge(), V({1})).acyclic);
}

TEST_CASE("xi search") {
  auto g = cayley_sn(3);
  Vec xi = suggested_xi(g, 1);
  CHECK(xi[0] > 0);
  CHECK(xi[1] > 0);
  CHECK(suggested_xi(g, 1) == xi);
  CHECK(find_xi(g.skeleton, 100, 42) == find_xi(g.skeleton, 100, 42));
  auto cyclic = triangle(V({1}), V({1}), V({1}));
  CHECK_THROWS_AS(find_xi(cyclic, 50, 1), PreconditionError);
}

TEST_CASE("canonical Morse function on the permutahedron") {
  auto g = cayley_sn(3);
  const auto& s = g.skeleton;
  auto md = canonical_morse(s, suggested_xi(g));
  for (int v = 0; v < s.num_vertices(); ++v) {
    Integer fl = md.phi[v].get_num() / md.phi[v].get_den();
    CHECK(fl == g.height[v]);
  }
  CHECK(md.betti == std::vector<int>{1, 2, 2, 1});
  CHECK(md.sigma == index_oracle(s, md));
  for (int e = 0; e < s.num_edges(); ++e)
    if (md.up[e]) CHECK(md.phi[s.edge(e).dst] > md.phi[s.edge(e).src]);
  CHECK(poincare_check(md));

  CHECK(flow_up(s, md, s.index_of("123")).size() == 6);
  auto top = flow_up(s, md, s.index_of("321"));
  CHECK(top == std::vector<int>{s.index_of("321")});

  Vec neg = scaled(md.xi, -1);
  auto md_neg = canonical_morse(s, neg);
  for (int p = 0; p < s.num_vertices(); ++p) CHECK(flow_down(s, md, p) == flow_up(s, md_neg, p));
}

TEST_CASE("Betti numbers on small graphs") {
  auto j = johnson(3, 2);
  auto md = canonical_morse(j.skeleton, suggested_xi(j));
  CHECK(md.betti == std::vector<int>{1, 1, 1});
  CHECK(poincare_check(md));

  auto single = Skeleton::from_unoriented(SpaceCtx::standard(1, "a"), {"p"}, {});
  auto m0 = canonical_morse(single, V({1}));
  CHECK(m0.betti == std::vector<int>{1});
  CHECK(poincare_check(m0));
}

TEST_CASE("Betti numbers do not depend on xi") {
  for (const char* spec : {"sn:3", "sn:4", "johnson:3,2", "johnson:4,2"}) {
    auto g = open_graph(spec);
    std::vector<int> first;
    for (std::uint64_t seed : {1, 2, 3, 4}) {
      Vec xi = find_xi(g.skeleton, 2000, seed);
      auto md = canonical_morse(g.skeleton, xi);
      int total = 0;
      for (int b : md.betti) total += b;
      CHECK(total == g.skeleton.num_vertices());
      CHECK(poincare_check(md));
      if (first.empty()) first = md.betti;
      CHECK(md.betti == first);
    }
  }
}

TEST_CASE("prescribed Morse functions") {
  auto s = single_edge();
  auto md = morse_from_function(s, V({1}), {0, 1});
  CHECK(md.sigma == std::vector<int>{0, 1});
  CHECK_THROWS_AS(morse_from_function(s, V({1}), {1, 0}), PreconditionError);
  CHECK_THROWS(morse_from_function(s, V({1}), {0, 0}));
}
