#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gkmlab/catalog.hpp"
#include "gkmlab/cohomology.hpp"
#include "gkmlab/crosssection.hpp"
#include "gkmlab/integration.hpp"
#include "gkmlab/morse.hpp"
#include "gkmlab/symfun.hpp"
#include "gkmlab/wallcross.hpp"

using namespace gkm;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Note {
  Outcome& o;
  std::ostringstream first;
  bool failed = false;
  void require(bool cond, const std::string& what) {
    if (cond || failed) {
      if (!cond) o.pass = false;
      return;
    }
    failed = true;
    o.pass = false;
    first << what;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Setup {
  CatalogGraph g;
  MorseData md;
  explicit Setup(const std::string& spec, std::uint64_t seed = 1)
      : g(open_graph(spec)), md(canonical_morse(g.skeleton, suggested_xi(g, seed))) {}
  const Skeleton& s() const { return g.skeleton; }
};

std::vector<Rational> regular_levels(const MorseData& md, std::size_t want) {
  auto phi = md.phi;
  std::sort(phi.begin(), phi.end());
  phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
  std::vector<Rational> out;
  for (const Rational& frac : {Rational(1, 2), Rational(1, 4), Rational(3, 4)})
    for (std::size_t i = 0; i + 1 < phi.size() && out.size() < want; ++i)
      out.push_back(phi[i] + frac * (phi[i + 1] - phi[i]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> spread_levels(const MorseData& md, std::size_t want) {
  auto phi = md.phi;
  std::sort(phi.begin(), phi.end());
  phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= want; ++k) {
    std::size_t i = k * (phi.size() - 1) / (want + 1);
    out.push_back((phi[i] + phi[i + 1]) / 2);
  }
  return out;
}

Vec random_valid_xi(const Skeleton& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-40, 40);
  for (;;) {
    Vec xi;
    for (int i = 0; i < s.dim(); ++i) xi.emplace_back(d(rng));
    if (is_polarizing(s, xi).ok && is_generic(s, xi).ok && orient_and_check_acyclic(s, xi).acyclic) return xi;
  }
}

Outcome criterion1() {
  Outcome o;
  Note note{o};
  auto t0 = Clock::now();
  Setup S("sn:3");
  const auto& s = S.s();
  auto a1 = MultiPoly::variable(2, 0), a2 = MultiPoly::variable(2, 1), one = MultiPoly::constant(2, 1), zero = MultiPoly(2);
  std::map<std::string, std::map<std::string, MultiPoly>> table{
      {"123", {{"123", one}, {"213", one}, {"132", one}, {"231", one}, {"312", one}, {"321", one}}},
      {"213", {{"123", zero}, {"213", -a1}, {"132", zero}, {"231", -a1 - a2}, {"312", -a1}, {"321", -a1 - a2}}},
      {"132", {{"123", zero}, {"213", zero}, {"132", -a2}, {"231", -a2}, {"312", -a1 - a2}, {"321", -a1 - a2}}},
      {"231", {{"123", zero}, {"213", zero}, {"132", zero}, {"231", a2 * (a1 + a2)}, {"312", zero}, {"321", a2 * (a1 + a2)}}},
      {"312", {{"123", zero}, {"213", zero}, {"132", zero}, {"231", zero}, {"312", a1 * (a1 + a2)}, {"321", a1 * (a1 + a2)}}},
      {"321",
       {{"123", zero}, {"213", zero}, {"132", zero}, {"231", zero}, {"312", zero}, {"321", -a1 * a2 * (a1 + a2)}}}};
  auto rep = check_morse_package(s, S.md, 3);
  note.require(rep.verdict, "package verdict negative");
  int entries = 0;
  for (const auto& f : rep.family) {
    const auto& col = table.at(s.id(f.vertex));
    note.require(f.found && f.sharpening && f.unique, "class for " + s.id(f.vertex) + " not sharp");
    for (const auto& [row, expect] : col) {
      bool same = f.cls.values[s.index_of(row)] == expect;
      note.require(same, "entry tau(" + s.id(f.vertex) + ") at " + row + " differs");
      entries += same;
    }
  }
  double t = seconds_since(t0);
  note.require(t < 5.0, "runtime over 5 s");
  std::ostringstream d;
  d << entries << "/36 entries verbatim, " << t << " s";
  o.detail = note.failed ? note.first.str() + "; " + d.str() : d.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  Note note{o};
  auto t0 = Clock::now();
  int checked = 0;
  for (auto [spec, max_m] : std::vector<std::pair<std::string, int>>{{"sn:3", 5}, {"johnson:3,2", 5}, {"johnson:4,2", 4}, {"sn:4", 3}}) {
    Setup S(spec);
    for (int m = 0; m <= max_m; ++m) {
      auto expect = betti_formula(S.md.betti, m, S.s().dim());
      note.require(static_cast<std::uint64_t>(dim_H(S.s(), m)) == expect, spec + " m=" + std::to_string(m));
      ++checked;
    }
  }
  double t = seconds_since(t0);
  note.require(t < 300.0, "runtime over 5 min");
  std::ostringstream d;
  d << checked << " degrees exact, " << t << " s";
  o.detail = note.failed ? note.first.str() + "; " + d.str() : d.str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  Note note{o};
  auto t0 = Clock::now();
  std::ostringstream dims;
  for (const std::string spec : {"sn:3", "johnson:3,2"}) {
    Setup S(spec);
    auto ctx = sweep_context(S.s(), S.md);
    dims << spec << " [";
    for (int m = 0; m <= 4; ++m) {
      auto r = dim_by_sweep(ctx, m);
      int direct = dim_H(S.s(), m);
      note.require(r.ok && r.final_dim == direct, spec + " m=" + std::to_string(m));
      dims << (m ? " " : "") << r.final_dim;
    }
    dims << "] ";
  }
  double t = seconds_since(t0);
  note.require(t < 120.0, "runtime over 2 min");
  dims << t << " s";
  o.detail = note.failed ? note.first.str() + "; " + dims.str() : dims.str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  Note note{o};
  int global = 0, local = 0;
  for (const std::string spec : {"sn:3", "johnson:3,2"}) {
    Setup S(spec);
    const auto& s = S.s();
    auto atlas = build_atlas(s, S.md);
    auto levels = regular_levels(S.md, 3);
    note.require(levels.size() == 3, spec + ": fewer than 3 levels");
    std::vector<CrossSection> sections;
    for (const auto& c : levels) sections.push_back(cross_section(s, S.md, atlas, c));
    for (int m = 0; m <= s.valence() + 1; ++m)
      for (const auto& b : basis_H(s, m)) {
        note.require(verify_integrality(s, b.values), spec + ": integral of a degree " + std::to_string(m) + " class");
        ++global;
        for (const auto& cs : sections) {
          note.require(integrate_c(s, cs, kirwan(s, cs, b.values)).is_polynomial(),
                       spec + ": reduced integral at level " + to_string(cs.c));
          ++local;
        }
      }
  }
  std::ostringstream d;
  d << global << " global and " << local << " reduced integrals polynomial";
  o.detail = note.failed ? note.first.str() + "; " + d.str() : d.str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  Note note{o};
  Setup S("sn:4");
  const auto& s = S.s();
  auto atlas = build_atlas(s, S.md);
  std::vector<CohomologyClass> classes;
  for (int m = 0; m <= 2 && classes.size() < 20; ++m)
    for (auto& b : basis_H(s, m))
      if (classes.size() < 20) classes.push_back(std::move(b));
  int members = 0, flipped = 0;
  auto levels = spread_levels(S.md, 3);
  for (const auto& c : levels) {
    auto cs = cross_section(s, S.md, atlas, c);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      auto img = kirwan(s, cs, classes[k].values);
      auto rep = membership_Hc(s, cs, atlas, img);
      bool all = std::all_of(rep.per_hyperedge.begin(), rep.per_hyperedge.end(), [](bool b) { return b; });
      note.require(rep.member && all, "class " + std::to_string(k) + " at level " + to_string(c));
      members += rep.member && all;
      if (k == classes.size() - 1) {
        img[0] += MultiPoly::variable(cs.ydim(), 0).pow(classes[k].degree + 1);
        auto bad = membership_Hc(s, cs, atlas, img);
        bool some_false = std::any_of(bad.per_hyperedge.begin(), bad.per_hyperedge.end(), [](bool b) { return !b; });
        note.require(!bad.member && some_false, "corruption undetected at level " + to_string(c));
        flipped += some_false;
      }
    }
  }
  std::ostringstream d;
  d << members << "/" << classes.size() * levels.size() << " memberships, corruption flagged at " << flipped << "/"
    << levels.size() << " levels";
  o.detail = note.failed ? note.first.str() + "; " + d.str() : d.str();
  return o;
}

Outcome criterion6() {
  Outcome o;
  Note note{o};
  auto t0 = Clock::now();
  int cases = 0;
  for (const auto& r : appendix_check(6)) {
    note.require(r.ok(), r.name);
    cases += r.cases;
  }
  double t = seconds_since(t0);
  note.require(t < 60.0, "runtime over 1 min");
  std::ostringstream d;
  d << cases << " cases, " << t << " s";
  o.detail = note.failed ? note.first.str() + "; " + d.str() : d.str();
  return o;
}

Outcome criterion7() {
  Outcome o;
  Note note{o};
  std::ostringstream d;
  for (const std::string spec : {"sn:3", "sn:4", "johnson:3,2", "johnson:4,2"}) {
    auto g = open_graph(spec);
    std::vector<Vec> seen;
    std::vector<int> reference;
    std::mt19937_64 rng(7);
    while (seen.size() < 3) {
      Vec xi = random_valid_xi(g.skeleton, rng);
      if (std::find(seen.begin(), seen.end(), xi) != seen.end()) continue;
      seen.push_back(xi);
      auto md = canonical_morse(g.skeleton, xi);
      note.require(poincare_check(md), spec + ": duality");
      if (reference.empty()) reference = md.betti;
      note.require(md.betti == reference, spec + ": betti depends on xi");
    }
    d << spec << " (";
    for (std::size_t k = 0; k < reference.size(); ++k) d << (k ? "," : "") << reference[k];
    d << ") ";
  }
  o.detail = note.failed ? note.first.str() + "; " + d.str() : d.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  Note note{o};
  std::ostringstream d;
  for (const std::string spec : {"sn:4", "johnson:4,2"}) {
    Setup S(spec);
    auto rep = two_dim_reduction_check(S.s(), S.md);
    note.require(rep.consistent, spec + ": slice and full verdicts inconsistent");
    note.require(rep.slices_pass && rep.full_pass, spec + ": negative verdict");
    d << spec << " " << rep.slices.size() << " slices " << (rep.slices_pass ? "PASS" : "FAIL") << " full "
      << (rep.full_pass ? "PASS" : "FAIL") << "; ";
  }
  o.detail = note.failed ? note.first.str() + "; " + d.str() : d.str();
  return o;
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
