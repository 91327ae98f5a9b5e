#include "gkmlab/reports.hpp"

#include <algorithm>
#include <sstream>

#include "gkmlab/error.hpp"
#include "gkmlab/integration.hpp"
#include "gkmlab/symfun.hpp"
#include "gkmlab/wallcross.hpp"

namespace gkm {

void Session::set_xi(Vec xi) {
  if (static_cast<int>(xi.size()) != skeleton().dim())
    throw InputError("xi: expected " + std::to_string(skeleton().dim()) + " entries, got " +
                     std::to_string(xi.size()));
  xi_ = std::move(xi);
  morse_.reset();
}

void Session::set_seed(std::uint64_t seed) {
  seed_ = seed;
  if (!xi_given()) morse_.reset();
}

const Vec& Session::xi() {
  if (!xi_) xi_ = suggested_xi(graph_, seed_);
  return *xi_;
}

const MorseData& Session::morse() {
  if (!morse_) {
    const Vec& v = xi();
    auto pol = is_polarizing(skeleton(), v);
    if (!pol.ok) {
      const auto& e = skeleton().edge(pol.edge);
      throw PreconditionError("xi " + to_string(v) + " is not polarizing: it vanishes on edge " +
                              skeleton().id(e.src) + "-" + skeleton().id(e.dst));
    }
    auto orient = orient_and_check_acyclic(skeleton(), v);
    if (!orient.acyclic) throw PreconditionError("the orientation of xi " + to_string(v) + " has a cycle");
    morse_ = canonical_morse(skeleton(), v);
  }
  return *morse_;
}

ReportOptions ReportOptions::from_json(const json& j) {
  ReportOptions o;
  if (j.is_null()) return o;
  if (!j.is_object()) throw InputError("options: expected a JSON object");
  auto int_field = [&](const char* key, int& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer() || j[key].get<int>() < 0) throw InputError(std::string("options.") + key + ": expected an integer >= 0");
    out = j[key].get<int>();
  };
  int_field("max_degree", o.max_degree);
  int_field("degree", o.degree);
  if (j.contains("level")) o.level = rational_from_json(j["level"]);
  if (j.contains("a")) o.a = rational_from_json(j["a"]);
  if (j.contains("class")) o.cls = j["class"];
  for (const auto& [key, _] : j.items())
    if (key != "max_degree" && key != "degree" && key != "level" && key != "a" && key != "class")
      throw InputError("options: unknown field '" + key + "'");
  return o;
}

namespace {

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

json table(const std::string& title, std::vector<std::string> columns) {
  return {{"title", title}, {"columns", columns}, {"rows", json::array()}};
}

std::string edge_name(const Skeleton& s, int e) { return s.id(s.edge(e).src) + "->" + s.id(s.edge(e).dst); }

std::string show(const MultiPoly& p, const std::vector<std::string>& labels) { return p.to_string(labels); }

json start(Session& ses, const std::string& command) {
  return {{"command", command}, {"graph", ses.graph().name}, {"verdict", "PASS"}, {"summary", json::array()},
          {"tables", json::array()}};
}

Report finish(json body, bool ok) {
  body["verdict"] = verdict(ok);
  return {std::move(body), ok};
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

void add_xi(json& body, Session& ses) {
  body["xi"] = to_json(ses.xi());
  body["summary"].push_back("xi = " + to_string(ses.xi()) + (ses.xi_given() ? "" : " (searched, seed " + std::to_string(ses.seed()) + ")"));
}

// ---------------------------------------------------------------- commands

Report cmd_validate(Session& ses) {
  const auto& s = ses.skeleton();
  json body = start(ses, "validate");
  auto rep = validate_axioms(s);
  body["vertices"] = s.num_vertices();
  body["edges"] = s.num_edges() / 2;
  body["dim"] = s.dim();
  body["valence"] = s.valence();
  body["summary"].push_back(std::to_string(s.num_vertices()) + " vertices, " + std::to_string(s.num_edges() / 2) +
                            " edges, valence " + std::to_string(s.valence()) + ", dim " + std::to_string(s.dim()));
  body["axioms"] = {{"A1", {{"pass", rep.a1}, {"witness", rep.a1_witness}}},
                    {"A2", {{"pass", rep.a2}, {"witness", rep.a2_witness}}},
                    {"A3", {{"pass", rep.a3}, {"witness", rep.a3_witness}}}};
  body["connection_found"] = rep.connection.has_value();
  json t = table("axioms", {"axiom", "pass", "witness"});
  t["rows"].push_back({"A1", verdict(rep.a1), rep.a1_witness});
  t["rows"].push_back({"A2", verdict(rep.a2), rep.a2_witness});
  t["rows"].push_back({"A3", verdict(rep.a3), rep.a3_witness});
  body["tables"].push_back(t);
  return finish(std::move(body), rep.ok());
}

Report cmd_morse(Session& ses) {
  const auto& s = ses.skeleton();
  json body = start(ses, "morse");
  add_xi(body, ses);
  const Vec& xi = ses.xi();
  auto pol = is_polarizing(s, xi);
  body["polarizing"] = pol.ok;
  if (!pol.ok) {
    body["summary"].push_back("not polarizing: vanishes on " + edge_name(s, pol.edge));
    return finish(std::move(body), false);
  }
  auto gen = is_generic(s, xi);
  body["generic"] = gen.ok;
  if (!gen.ok) body["summary"].push_back("not generic at vertex " + s.id(gen.vertex));
  auto orient = orient_and_check_acyclic(s, xi);
  body["acyclic"] = orient.acyclic;
  if (!orient.acyclic) {
    std::string cyc;
    for (int v : orient.cycle) cyc += (cyc.empty() ? "" : " -> ") + s.id(v);
    body["cycle"] = cyc;
    body["summary"].push_back("orientation has a cycle: " + cyc);
    return finish(std::move(body), false);
  }
  const auto& md = ses.morse();
  json t = table("morse function", {"vertex", "phi", "index", "flow-up", "flow-down"});
  json verts = json::array();
  for (int v : phi_order(md)) {
    auto up = flow_up(s, md, v);
    auto down = flow_down(s, md, v);
    t["rows"].push_back({s.id(v), to_display(md.phi[v]), md.sigma[v], up.size(), down.size()});
    verts.push_back({{"id", s.id(v)}, {"phi", to_json(md.phi[v])}, {"index", md.sigma[v]},
                     {"flow_up", up.size()}, {"flow_down", down.size()}});
  }
  body["vertices"] = verts;
  body["betti"] = md.betti;
  body["poincare"] = poincare_check(md);
  body["summary"].push_back("betti = " + join(md.betti) + ", duality " + verdict(poincare_check(md)));
  body["tables"].push_back(t);
  return finish(std::move(body), gen.ok);
}

Report cmd_betti(Session& ses) {
  json body = start(ses, "betti");
  add_xi(body, ses);
  const auto& md = ses.morse();
  bool dual = poincare_check(md);
  body["betti"] = md.betti;
  body["poincare"] = dual;
  json t = table("betti numbers", {"k", "b_k", "b_{d-k}"});
  int d = static_cast<int>(md.betti.size()) - 1;
  for (int k = 0; k <= d; ++k) t["rows"].push_back({k, md.betti[k], md.betti[d - k]});
  body["tables"].push_back(t);
  body["summary"].push_back("b_k = b_{d-k}: " + std::string(verdict(dual)));
  return finish(std::move(body), dual);
}

Report cmd_cohdim(Session& ses, const ReportOptions& o) {
  const auto& s = ses.skeleton();
  json body = start(ses, "cohdim");
  add_xi(body, ses);
  const auto& md = ses.morse();
  int M = o.max_degree >= 0 ? o.max_degree : s.valence();
  json t = table("dim H^m", {"m", "dim_H", "formula", "match"});
  json degs = json::array();
  bool ok = true;
  for (int m = 0; m <= M; ++m) {
    int dim = dim_H(s, m);
    auto f = betti_formula(md.betti, m, s.dim());
    bool match = static_cast<std::uint64_t>(dim) == f;
    ok = ok && match;
    t["rows"].push_back({m, dim, f, verdict(match)});
    degs.push_back({{"m", m}, {"dim_h", dim}, {"formula", f}, {"match", match}});
  }
  body["degrees"] = degs;
  body["tables"].push_back(t);
  return finish(std::move(body), ok);
}

json thom_table(const Skeleton& s, const std::vector<GeneratingResult>& family, json& out) {
  std::vector<std::string> cols{"class"};
  for (const auto& id : s.ids()) cols.push_back(id);
  cols.push_back("unique");
  cols.push_back("sharp");
  json t = table("generating classes", cols);
  out = json::array();
  for (const auto& g : family) {
    json row = json::array({"tau(" + s.id(g.vertex) + ")"});
    json display = json::object();
    for (int v = 0; v < s.num_vertices(); ++v) {
      std::string val = g.found ? show(g.cls.values[v], s.ctx().labels()) : "-";
      row.push_back(val);
      display[s.id(v)] = val;
    }
    row.push_back(g.unique ? "yes" : "no");
    row.push_back(g.sharpening ? "yes" : "no");
    t["rows"].push_back(row);
    json entry = {{"vertex", s.id(g.vertex)}, {"found", g.found}, {"unique", g.unique}, {"sharpening", g.sharpening},
                  {"display", display}};
    if (g.found) entry["class"] = class_to_json(s, g.cls.values, g.cls.degree);
    out.push_back(entry);
  }
  return t;
}

Report cmd_thom(Session& ses) {
  const auto& s = ses.skeleton();
  json body = start(ses, "thom");
  add_xi(body, ses);
  auto family = generating_family(s, ses.morse());
  json fam;
  body["tables"].push_back(thom_table(s, family, fam));
  body["family"] = fam;
  bool ok = family_complete(family);
  body["summary"].push_back("generating family complete: " + std::string(verdict(ok)));
  return finish(std::move(body), ok);
}

Report cmd_package(Session& ses, const ReportOptions& o) {
  const auto& s = ses.skeleton();
  json body = start(ses, "package");
  add_xi(body, ses);
  int M = o.max_degree >= 0 ? o.max_degree : s.valence();
  auto rep = check_morse_package(s, ses.morse(), M);
  json fam;
  body["tables"].push_back(thom_table(s, rep.family, fam));
  body["family"] = fam;
  json t = table("free module check", {"m", "dim_H", "formula", "span_rank", "ok"});
  json degs = json::array();
  for (const auto& d : rep.degrees) {
    t["rows"].push_back({d.m, d.dim_h, d.formula, d.span_rank, verdict(d.ok())});
    degs.push_back({{"m", d.m}, {"dim_h", d.dim_h}, {"formula", d.formula}, {"span_rank", d.span_rank}, {"ok", d.ok()}});
  }
  body["tables"].push_back(t);
  body["degrees"] = degs;
  body["summary"].push_back("generating family complete: " + std::string(verdict(family_complete(rep.family))));
  body["summary"].push_back("dimensions and spans up to degree " + std::to_string(M) + ": " + verdict(rep.dims_ok));
  return finish(std::move(body), rep.verdict);
}

Report cmd_slices(Session& ses) {
  const auto& s = ses.skeleton();
  json body = start(ses, "slices");
  add_xi(body, ses);
  auto rep = two_dim_reduction_check(s, ses.morse(), ses.seed());
  json t = table("two-dimensional slices", {"h", "vertices", "valence", "xi", "pass"});
  json slices = json::array();
  for (const auto& sl : rep.slices) {
    std::string h;
    for (const auto& b : sl.h.basis()) h += (h.empty() ? "" : " ") + to_string(b);
    json comps = json::array();
    for (const auto& c : sl.components) {
      t["rows"].push_back({h, c.comp.graph.num_vertices(), c.comp.valence, c.xi_reused ? "restricted" : "searched",
                           verdict(c.passes)});
      comps.push_back({{"vertices", c.comp.graph.ids()}, {"valence", c.comp.valence}, {"xi", to_json(c.xi)},
                       {"xi_reused", c.xi_reused}, {"pass", c.passes}});
    }
    if (sl.skipped_irregular) t["rows"].push_back({h, "-", "irregular", "-", "skipped"});
    json basis = json::array();
    for (const auto& v : sl.h.basis()) basis.push_back(to_json(v));
    slices.push_back({{"basis", basis},
                      {"components", comps},
                      {"skipped_irregular", sl.skipped_irregular}});
  }
  body["slices"] = slices;
  body["slices_pass"] = rep.slices_pass;
  body["full_pass"] = rep.full_pass;
  body["consistent"] = rep.consistent;
  body["warnings"] = rep.warnings;
  body["tables"].push_back(t);
  body["summary"].push_back("slices " + std::string(verdict(rep.slices_pass)) + ", full graph " + verdict(rep.full_pass) +
                            ", " + (rep.consistent ? "consistent" : "INCONSISTENT"));
  for (const auto& w : rep.warnings) body["summary"].push_back("warning: " + w);
  return finish(std::move(body), rep.consistent && rep.full_pass);
}

Report cmd_integrate(Session& ses, const ReportOptions& o) {
  const auto& s = ses.skeleton();
  const auto& labels = s.ctx().labels();
  json body = start(ses, "integrate");
  if (o.cls) {
    int degree = 0;
    auto values = class_from_json(s, *o.cls, &degree);
    bool cls_ok = !class_violation(s, values).has_value();
    auto r = integrate(s, values);
    body["is_class"] = cls_ok;
    body["integral"] = r.to_string(labels);
    body["polynomial"] = r.is_polynomial();
    body["summary"].push_back("integral = " + r.to_string(labels));
    body["summary"].push_back(std::string("polynomial: ") + (r.is_polynomial() ? "yes" : "no"));
    bool ok = r.is_polynomial();
    if (o.max_degree >= 0) {
      add_xi(body, ses);
      auto family = generating_family(s, ses.morse());
      if (family_complete(family)) {
        auto d = duality_test(s, family, values, o.max_degree);
        body["duality"] = {{"products_integral", d.products_integral}, {"is_class", d.is_class}, {"agree", d.agree},
                           {"products_checked", d.products_checked}};
        body["summary"].push_back("pairing test over " + std::to_string(d.products_checked) + " products: " +
                                  (d.products_integral ? "integral" : "not integral") + ", agrees with direct test: " +
                                  (d.agree ? "yes" : "no"));
        ok = ok && d.agree;
      }
    }
    return finish(std::move(body), ok);
  }
  int M = o.max_degree >= 0 ? o.max_degree : s.valence() + 1;
  json t = table("integrals of basis classes", {"m", "class", "polynomial", "integral"});
  bool ok = true;
  int total = 0;
  for (int m = 0; m <= M; ++m) {
    auto basis = basis_H(s, m);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto r = integrate(s, basis[i].values);
      ok = ok && r.is_polynomial();
      ++total;
      t["rows"].push_back({m, i, r.is_polynomial() ? "yes" : "no", r.to_string(labels)});
    }
  }
  body["classes"] = total;
  body["all_polynomial"] = ok;
  body["tables"].push_back(t);
  body["summary"].push_back(std::to_string(total) + " basis classes up to degree " + std::to_string(M) +
                            ", all integrals polynomial: " + verdict(ok));
  return finish(std::move(body), ok);
}

std::vector<Rational> regular_levels(const MorseData& md) {
  std::vector<Rational> phi = md.phi;
  std::sort(phi.begin(), phi.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i + 1 < phi.size(); ++i) out.push_back((phi[i] + phi[i + 1]) / 2);
  return out;
}

Report cmd_cross_section(Session& ses, const ReportOptions& o) {
  const auto& s = ses.skeleton();
  json body = start(ses, "cross-section");
  add_xi(body, ses);
  const auto& md = ses.morse();
  auto atlas = build_atlas(s, md, ses.seed());
  std::vector<Rational> levels = o.level ? std::vector<Rational>{*o.level} : regular_levels(md);
  int M = o.max_degree >= 0 ? o.max_degree : 2;
  std::vector<MultiPoly> given;
  if (o.cls) given = class_from_json(s, *o.cls);
  std::vector<std::vector<CohomologyClass>> bases;
  if (!o.cls)
    for (int m = 0; m <= M; ++m) bases.push_back(basis_H(s, m));

  bool ok = true;
  json out = json::array();
  json summary = table("levels", {"c", "|V_c|", "hyperedges", "valence count", "test", "ok"});
  for (const auto& c : levels) {
    auto cs = cross_section(s, md, atlas, c);
    auto ylabels = cs.pb.labels();
    json lvl = {{"c", to_json(c)}, {"y_basis", json::array()}, {"members", json::array()}, {"hyperedges", json::array()}};
    for (const auto& y : cs.pb.y()) lvl["y_basis"].push_back(to_json(y));
    json mt = table("V_c at c = " + to_display(c), {"vertex", "edge", "m", "beta"});
    for (std::size_t i = 0; i < cs.members.size(); ++i) {
      mt["rows"].push_back({i, edge_name(s, cs.members[i]), to_display(cs.m[i]), to_string(cs.beta[i])});
      lvl["members"].push_back({{"edge", edge_name(s, cs.members[i])}, {"m", to_json(cs.m[i])}, {"beta", to_json(cs.beta[i])}});
    }
    json ht = table("hyperedges at c = " + to_display(c), {"members", "mu", "alpha_E"});
    for (const auto& E : cs.hyperedges) {
      ht["rows"].push_back({join(E.members), E.mu, to_string(E.label_g)});
      lvl["hyperedges"].push_back({{"members", E.members}, {"mu", E.mu}, {"alpha", to_json(E.label_g)}});
    }
    lvl["singletons"] = cs.singletons;
    lvl["valence_count_ok"] = cs.valence_count_ok;
    bool level_ok = cs.valence_count_ok;
    std::string test;
    if (o.cls) {
      auto kc = kirwan(s, cs, given);
      auto mem = membership_Hc(s, cs, atlas, kc);
      auto integral = integrate_c(s, cs, kc);
      lvl["kirwan"] = json::array();
      for (std::size_t i = 0; i < kc.size(); ++i) lvl["kirwan"].push_back(show(kc[i], ylabels));
      lvl["member"] = mem.member;
      lvl["per_hyperedge"] = mem.per_hyperedge;
      lvl["integral"] = integral.to_string(ylabels);
      lvl["integral_polynomial"] = integral.is_polynomial();
      level_ok = level_ok && mem.member && integral.is_polynomial();
      test = std::string("class: member ") + (mem.member ? "yes" : "no") + ", integral " +
             (integral.is_polynomial() ? "polynomial" : "not polynomial");
    } else {
      json dims = json::array();
      int tested = 0, passed = 0;
      for (int m = 0; m <= M; ++m) {
        for (const auto& cl : bases[m]) {
          ++tested;
          passed += membership_Hc(s, cs, atlas, kirwan(s, cs, cl.values)).member;
        }
        int ld = level_dimension(s, cs, atlas, m);
        int kr = kirwan_rank(s, cs, bases[m], m);
        dims.push_back({{"m", m}, {"level_dim", ld}, {"kirwan_rank", kr}});
        level_ok = level_ok && ld == kr;
      }
      level_ok = level_ok && tested == passed;
      lvl["kirwan_members"] = {{"tested", tested}, {"passed", passed}};
      lvl["dimensions"] = dims;
      test = "kirwan images " + std::to_string(passed) + "/" + std::to_string(tested);
      for (const auto& d : dims)
        test += ", m=" + std::to_string(d["m"].get<int>()) + ": " + std::to_string(d["level_dim"].get<int>()) + "/" +
                std::to_string(d["kirwan_rank"].get<int>());
    }
    lvl["ok"] = level_ok;
    ok = ok && level_ok;
    summary["rows"].push_back({to_display(c), cs.members.size(), cs.hyperedges.size(),
                               cs.valence_count_ok ? "ok" : "FAIL", test, verdict(level_ok)});
    if (o.level) {
      body["tables"].push_back(mt);
      body["tables"].push_back(ht);
    }
    out.push_back(lvl);
  }
  body["levels"] = out;
  body["tables"].push_back(summary);
  if (!o.cls) body["summary"].push_back("dimension columns: level dimension / Kirwan rank, degrees 0.." + std::to_string(M));
  return finish(std::move(body), ok);
}

Report cmd_cut(Session& ses, const ReportOptions& o) {
  json body = start(ses, "cut");
  add_xi(body, ses);
  auto ps = cut_product(ses.skeleton(), ses.morse(), o.a);
  const auto& p = ps.product;
  body["a"] = to_json(ps.a);
  body["window"] = {to_json(ps.window_low()), to_json(ps.window_high())};
  body["axioms"] = ps.axioms.ok();
  body["acyclic"] = ps.acyclic;
  body["index_ok"] = ps.index_ok;
  body["betti_ok"] = ps.betti_ok;
  body["betti"] = ps.morse.betti;
  body["product"] = skeleton_to_json(p);
  json t = table("product vertices", {"vertex", "Phi", "index"});
  for (int v : phi_order(ps.morse)) t["rows"].push_back({p.id(v), to_display(ps.morse.phi[v]), ps.morse.sigma[v]});
  body["tables"].push_back(t);
  body["summary"].push_back("a = " + to_display(ps.a) + ", window (" + to_display(ps.window_low()) + ", " +
                            to_display(ps.window_high()) + ")");
  body["summary"].push_back(std::string("axioms ") + verdict(ps.axioms.ok()) + ", indices " + verdict(ps.index_ok) +
                            ", betti " + join(ps.morse.betti) + " " + verdict(ps.betti_ok));
  return finish(std::move(body), ps.axioms.ok() && ps.index_ok && ps.betti_ok);
}

Report cmd_sweep(Session& ses, const ReportOptions& o) {
  const auto& s = ses.skeleton();
  json body = start(ses, "sweep");
  add_xi(body, ses);
  auto ctx = sweep_context(s, ses.morse(), ses.seed());
  std::vector<int> degrees;
  if (o.degree >= 0) {
    degrees.push_back(o.degree);
  } else {
    int M = o.max_degree >= 0 ? o.max_degree : 3;
    for (int m = 0; m <= M; ++m) degrees.push_back(m);
  }
  bool ok = true;
  json finals = table("comparison", {"m", "sweep", "dim_H", "formula", "window", "ok"});
  json runs = json::array();
  for (int m : degrees) {
    auto r = dim_by_sweep(ctx, m);
    json st = table("sweep m = " + std::to_string(m), {"wall", "r", "s", "level", "delta", "running", "level_dim", "kirwan_rank", "ok"});
    st["rows"].push_back({"start", "-", "-", to_display(r.start_level), "-", r.start_dim, r.start_level_dim,
                          r.start_kirwan_rank, "-"});
    json steps = json::array();
    for (const auto& step : r.steps) {
      st["rows"].push_back({ctx.ps.product.id(ctx.ps.level0[step.vertex]), step.r, step.s, to_display(step.level),
                            step.delta, step.running, step.level_dim, step.kirwan_rank, verdict(step.ok())});
      steps.push_back({{"wall", s.id(step.vertex)}, {"r", step.r}, {"s", step.s}, {"level", to_json(step.level)},
                       {"delta", step.delta}, {"running", step.running}, {"level_dim", step.level_dim},
                       {"kirwan_rank", step.kirwan_rank}, {"ok", step.ok()}});
    }
    body["tables"].push_back(st);
    finals["rows"].push_back({m, r.final_dim, r.dim_h, r.formula, r.window_dim, verdict(r.ok)});
    runs.push_back({{"m", m}, {"start_level", to_json(r.start_level)}, {"start_dim", r.start_dim}, {"steps", steps},
                    {"final_dim", r.final_dim}, {"dim_h", r.dim_h}, {"formula", r.formula},
                    {"window_dim", r.window_dim}, {"bracket_ok", r.bracket_ok}, {"ok", r.ok}});
    ok = ok && r.ok;
  }
  body["runs"] = runs;
  body["tables"].push_back(finals);
  return finish(std::move(body), ok);
}

// ---------------------------------------------------------------- rendering

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

}  // namespace

Report run_report(Session& ses, const std::string& command, const ReportOptions& o) {
  if (command == "validate") return cmd_validate(ses);
  if (command == "morse") return cmd_morse(ses);
  if (command == "betti") return cmd_betti(ses);
  if (command == "cohdim") return cmd_cohdim(ses, o);
  if (command == "thom") return cmd_thom(ses);
  if (command == "package") return cmd_package(ses, o);
  if (command == "slices") return cmd_slices(ses);
  if (command == "integrate") return cmd_integrate(ses, o);
  if (command == "cross-section") return cmd_cross_section(ses, o);
  if (command == "cut") return cmd_cut(ses, o);
  if (command == "sweep") return cmd_sweep(ses, o);
  throw InputError("unknown command '" + command + "'");
}

Report appendix_report(int max_m, std::uint64_t seed) {
  if (max_m < 1) throw InputError("max-m must be at least 1");
  json body = {{"command", "appendix-check"}, {"max_m", max_m}, {"seed", seed}, {"verdict", "PASS"},
               {"summary", json::array()}, {"tables", json::array()}};
  json t = table("identity suites", {"suite", "cases", "passed", "ok"});
  json suites = json::array();
  bool ok = true;
  for (const auto& r : appendix_check(max_m, seed)) {
    t["rows"].push_back({r.name, r.cases, r.passed, verdict(r.ok())});
    suites.push_back({{"name", r.name}, {"cases", r.cases}, {"passed", r.passed}, {"ok", r.ok()}});
    ok = ok && r.ok();
  }
  body["suites"] = suites;
  body["tables"].push_back(t);
  return finish(std::move(body), ok);
}

std::string render_table(const json& body) {
  std::ostringstream out;
  out << body.value("command", "") << (body.contains("graph") ? " " + body["graph"].get<std::string>() : "") << "\n";
  for (const auto& line : body["summary"]) out << "  " << line.get<std::string>() << "\n";
  for (const auto& t : body["tables"]) {
    const auto& cols = t["columns"];
    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].get<std::string>().size();
    for (const auto& row : t["rows"])
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], cell(row[i]).size());
    auto line = [&](const json& row) {
      std::string l;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::string c = cell(row[i]);
        if (i + 1 < row.size()) c.resize(width[i], ' ');
        l += (i ? "  " : "") + c;
      }
      out << l << "\n";
    };
    out << "\n" << t["title"].get<std::string>() << "\n";
    line(cols);
    std::string rule;
    for (std::size_t i = 0; i < width.size(); ++i) rule += (i ? "  " : "") + std::string(width[i], '-');
    out << rule << "\n";
    for (const auto& row : t["rows"]) line(row);
  }
  out << "\nverdict: " << body["verdict"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace gkm
