#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gkmlab/error.hpp"
#include "gkmlab/morse.hpp"
#include "gkmlab/serialize.hpp"
#include "support.hpp"

using namespace gkmtest;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gkmlab_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("S_2 is a single edge") {
  auto g = cayley_sn(2);
  const auto& s = g.skeleton;
  CHECK(s.num_vertices() == 2);
  CHECK(s.valence() == 1);
  CHECK(s.dim() == 1);
  int e = edge_between(s, "12", "21");
  REQUIRE(e >= 0);
  CHECK(s.edge(e).alpha == V({1}));
  CHECK(s.edge(s.edge(e).rev).alpha == V({-1}));
}

TEST_CASE("S_3 permutahedron") {
  auto g = cayley_sn(3);
  const auto& s = g.skeleton;
  CHECK(s.num_vertices() == 6);
  CHECK(s.valence() == 3);
  CHECK(s.dim() == 2);
  CHECK(s.ctx().labels() == std::vector<std::string>{"a1", "a2"});
  CHECK(s.edge(edge_between(s, "123", "213")).alpha == V({1, 0}));
  CHECK(s.edge(edge_between(s, "123", "132")).alpha == V({0, 1}));
  CHECK(s.edge(edge_between(s, "123", "321")).alpha == V({1, 1}));
  CHECK(g.height[s.index_of("123")] == 0);
  CHECK(g.height[s.index_of("321")] == 3);
  CHECK(validate_axioms(s).ok());
  CHECK(open_graph("sn:3").skeleton.ids() == s.ids());
}

TEST_CASE("Johnson graphs") {
  auto g = johnson(3, 2);
  const auto& s = g.skeleton;
  CHECK(s.num_vertices() == 3);
  CHECK(s.valence() == 2);
  CHECK(s.dim() == 2);
  CHECK(validate_axioms(s).ok());
  CHECK(g.height[s.index_of("12")] == 0);
  CHECK(g.height[s.index_of("23")] == 2);

  auto md = canonical_morse(s, suggested_xi(g));
  int lowest = static_cast<int>(std::min_element(md.phi.begin(), md.phi.end()) - md.phi.begin());
  CHECK(s.id(lowest) == "12");
  CHECK(md.phi[lowest] == 0);

  auto h = johnson(3, 1).skeleton;
  CHECK(h.num_vertices() == 3);
  CHECK(h.valence() == 2);
  CHECK(validate_axioms(h).ok());
  auto j31 = johnson(3, 1);
  CHECK(canonical_morse(h, suggested_xi(j31)).betti == md.betti);
  CHECK(md.betti == std::vector<int>{1, 1, 1});

  auto j42 = open_graph("johnson:4,2").skeleton;
  CHECK(j42.num_vertices() == 6);
  CHECK(j42.valence() == 4);
}

TEST_CASE("save and load") {
  auto s = cayley_sn(3).skeleton;
  auto path = temp_path("sn3.json");
  save_skeleton(s, path);
  auto back = load_skeleton(path);
  CHECK(back.ids() == s.ids());
  CHECK(skeleton_to_json(back) == skeleton_to_json(s));
  CHECK(open_graph("file:" + path).skeleton.num_edges() == s.num_edges());
  std::remove(path.c_str());

  auto halves = write_temp("half.json", R"({"dim":1,"basis":["t"],"vertices":["p","q"],
      "edges":[{"src":"p","dst":"q","alpha":["2/4"]}]})");
  auto h = load_skeleton(halves);
  CHECK(h.edge(edge_between(h, "p", "q")).alpha == Vec{Q("1/2")});
  std::remove(halves.c_str());

  auto missing = write_temp("missing.json", R"({"dim":1,"basis":["t"],"vertices":["p","q"],
      "edges":[{"src":"p","dst":"q"}]})");
  try {
    load_skeleton(missing);
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("edges[0]") != std::string::npos);
    CHECK(std::string(e.what()).find("alpha") != std::string::npos);
  }
  std::remove(missing.c_str());
}

TEST_CASE("bad specs") {
  for (const char* spec : {"sn:x", "sn:1", "sn:", "johnson:4", "johnson:4,4", "johnson:4,0", "cube:3", "sn3",
                           "file:/nonexistent/graph.json"})
    CHECK_THROWS_AS(open_graph(spec), InputError);
  auto garbage = write_temp("garbage.json", "{ not json");
  CHECK_THROWS_AS(load_skeleton(garbage), InputError);
  std::remove(garbage.c_str());
}
