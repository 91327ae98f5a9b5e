#include "gkmlab/crosssection.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "gkmlab/error.hpp"
#include "gkmlab/linalg.hpp"
#include "gkmlab/parallel.hpp"
#include "gkmlab/symfun.hpp"

namespace gkm {

PolarizedBasis::PolarizedBasis(const Vec& xi) : xi_(xi) {
  if (is_zero(xi)) throw PreconditionError("polarized basis: xi = 0");
  x_ = scaled(xi, Rational(1) / dot(xi, xi));
  std::vector<SparseRow> row{to_sparse(xi)};
  Echelon e = rref(row, static_cast<int>(xi.size()));
  free_ = e.free_columns();
  y_ = nullspace(e).basis;
}

std::vector<std::string> PolarizedBasis::labels() const {
  std::vector<std::string> out;
  for (int k = 0; k < ydim(); ++k) out.push_back("y" + std::to_string(k + 1));
  return out;
}

Vec PolarizedBasis::to_y(const Vec& v) const {
  if (dot(v, xi_) != 0) throw PreconditionError("vector " + to_string(v) + " is not in the annihilator of xi");
  Vec out;
  for (int f : free_) out.push_back(v[f]);
  return out;
}

Vec PolarizedBasis::from_y(const Vec& coords) const {
  Vec v(xi_.size());
  for (std::size_t k = 0; k < y_.size(); ++k) v = add(v, scaled(y_[k], coords[k]));
  return v;
}

Vec PolarizedBasis::beta(const Vec& alpha) const {
  Rational mm = m(alpha);
  if (mm == 0) throw PreconditionError("beta of a weight vanishing on xi");
  return to_y(sub(x_, scaled(alpha, Rational(1) / mm)));
}

Vec PolarizedBasis::project(const Vec& v, const Vec& alpha) const {
  Rational mm = m(alpha);
  if (mm == 0) throw PreconditionError("projection along a weight vanishing on xi");
  return to_y(sub(v, scaled(alpha, dot(v, xi_) / mm)));
}

MultiPoly PolarizedBasis::restrict_along(const MultiPoly& f, const Vec& alpha) const {
  std::vector<MultiPoly> images;
  for (int i = 0; i < ambient_dim(); ++i) {
    Vec unit(ambient_dim());
    unit[i] = 1;
    images.push_back(MultiPoly::linear(project(unit, alpha)));
  }
  return f.substitute(images, ydim());
}

// ------------------------------------------------------------------ atlas

namespace {

Vec line_in_annihilator(const Subspace& h, const Vec& xi) {
  const Vec& b1 = h.basis()[0];
  const Vec& b2 = h.basis()[1];
  return primitive(sub(scaled(b2, dot(b1, xi)), scaled(b1, dot(b2, xi))));
}

MultiPoly embed_local(const MultiPoly& p, const Subspace& h, int dim) {
  std::vector<MultiPoly> images;
  for (const auto& b : h.basis()) images.push_back(MultiPoly::linear(b));
  return p.substitute(images, dim);
}

}  // namespace

SliceAtlas build_atlas(const Skeleton& s, const MorseData& md, std::uint64_t seed) {
  struct Job {
    Subspace h;
    Component comp;
  };
  std::vector<Job> jobs;
  for (const auto& h : enumerate_2d_subspaces(s))
    for (auto& comp : subskeleton(s, h))
      if (comp.valence > 0) jobs.push_back({h, std::move(comp)});

  SliceAtlas atlas;
  atlas.components.resize(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), [&](int i) {
    auto& ac = atlas.components[i];
    const auto& job = jobs[i];
    ac.h = job.h;
    ac.label = line_in_annihilator(job.h, md.xi);
    ac.slice = analyze_slice_component(job.comp, job.h, md.xi, seed);
    ac.family_ok = ac.slice.passes;
    for (const auto& g : ac.slice.family) {
      if (!g.found) continue;
      CohomologyClass c;
      c.degree = g.cls.degree;
      c.values.assign(s.num_vertices(), MultiPoly(s.dim()));
      for (std::size_t v = 0; v < g.cls.values.size(); ++v)
        c.values[job.comp.parent_vertex[v]] = embed_local(g.cls.values[v], job.h, s.dim());
      ac.family.push_back(std::move(c));
      ac.family_vertex.push_back(job.comp.parent_vertex[g.vertex]);
    }
  });
  atlas.by_edge.assign(s.num_edges(), {});
  for (std::size_t i = 0; i < atlas.components.size(); ++i)
    for (int e : atlas.components[i].slice.comp.parent_edge) atlas.by_edge[e].push_back(static_cast<int>(i));
  return atlas;
}

// ------------------------------------------------------------------ cross-sections

int CrossSection::position(int edge) const {
  auto it = std::find(members.begin(), members.end(), edge);
  return it == members.end() ? -1 : static_cast<int>(it - members.begin());
}

CrossSection cross_section(const Skeleton& s, const MorseData& md, const SliceAtlas& atlas, const Rational& c) {
  for (const auto& v : md.phi)
    if (v == c) throw PreconditionError("level " + to_display(c) + " is a critical value");
  CrossSection cs;
  cs.c = c;
  cs.pb = PolarizedBasis(md.xi);
  for (int e = 0; e < s.num_edges(); ++e) {
    const auto& ed = s.edge(e);
    if (md.up[e] && md.phi[ed.src] < c && c < md.phi[ed.dst]) {
      cs.members.push_back(e);
      cs.m.push_back(cs.pb.m(ed.alpha));
      cs.beta.push_back(cs.pb.beta(ed.alpha));
    }
  }
  std::vector<int> count(cs.members.size(), 0);
  for (std::size_t i = 0; i < atlas.components.size(); ++i) {
    const auto& ac = atlas.components[i];
    Hyperedge E;
    E.atlas_index = static_cast<int>(i);
    for (int e : ac.slice.comp.parent_edge) {
      int pos = cs.position(e);
      if (pos >= 0) E.members.push_back(pos);
    }
    if (E.members.empty()) continue;
    E.mu = ac.slice.comp.valence - 1;
    for (int pos : E.members) count[pos] += E.mu;
    if (E.members.size() == 1) {
      ++cs.singletons;
      continue;
    }
    std::sort(E.members.begin(), E.members.end());
    E.label_g = ac.label;
    E.label_y = cs.pb.to_y(ac.label);
    cs.hyperedges.push_back(std::move(E));
  }
  int d = s.valence();
  for (int k : count)
    if (k != d - 1) cs.valence_count_ok = false;
  return cs;
}

std::vector<MultiPoly> kirwan(const Skeleton& s, const CrossSection& cs, const std::vector<MultiPoly>& values) {
  if (static_cast<int>(values.size()) != s.num_vertices()) throw ContextMismatch("kirwan: one value per vertex expected");
  std::vector<MultiPoly> out;
  for (int e : cs.members) {
    const auto& ed = s.edge(e);
    MultiPoly a = cs.pb.restrict_along(values[ed.src], ed.alpha);
    MultiPoly b = cs.pb.restrict_along(values[ed.dst], ed.alpha);
    if (!(a == b))
      throw InconsistencyError("Kirwan map differs at the endpoints of " + s.id(ed.src) + "->" + s.id(ed.dst));
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::vector<Vec> projected_others(const Skeleton& s, const CrossSection& cs, int e, const std::vector<int>& edges) {
  const auto& alpha = s.edge(e).alpha;
  std::vector<Vec> out;
  for (int f : edges) {
    if (f == e) continue;
    Vec p = cs.pb.project(s.edge(f).alpha, alpha);
    if (is_zero(p))
      throw PreconditionError("projected weight vanishes at crossing edge " + s.id(s.edge(e).src) + "->" +
                              s.id(s.edge(e).dst));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> component_edges_at(const Component& comp, const Skeleton& s, int vertex) {
  std::vector<int> out;
  for (int e : comp.parent_edge)
    if (s.edge(e).src == vertex) out.push_back(e);
  return out;
}

}  // namespace

RationalFn density(const Skeleton& s, const CrossSection& cs, int pos) {
  int e = cs.members.at(pos);
  auto forms = projected_others(s, cs, e, s.out(s.edge(e).src));
  return RationalFn::inverse_of_product(cs.ydim(), forms, Rational(1) / cs.m[pos]);
}

RationalFn integrate_c(const Skeleton& s, const CrossSection& cs, const std::vector<RationalFn>& values) {
  if (values.size() != cs.members.size()) throw ContextMismatch("integrate_c: one value per cross-section vertex");
  RationalFn total(cs.ydim());
  for (std::size_t pos = 0; pos < values.size(); ++pos)
    if (!values[pos].is_zero()) total += density(s, cs, static_cast<int>(pos)) * values[pos];
  return total;
}

RationalFn integrate_c(const Skeleton& s, const CrossSection& cs, const std::vector<MultiPoly>& values) {
  std::vector<RationalFn> fns(values.begin(), values.end());
  return integrate_c(s, cs, fns);
}

RationalFn component_density(const Skeleton& s, const CrossSection& cs, const SliceAtlas& atlas, const Hyperedge& E,
                             int pos) {
  const auto& comp = atlas.components.at(E.atlas_index).slice.comp;
  int e = cs.members.at(pos);
  auto forms = projected_others(s, cs, e, component_edges_at(comp, s, s.edge(e).src));
  return RationalFn::inverse_of_product(cs.ydim(), forms, Rational(1) / cs.m[pos]);
}

// ------------------------------------------------------------------ finite sets

namespace {

void check_injective(const std::vector<Vec>& tau) {
  for (std::size_t i = 0; i < tau.size(); ++i)
    for (std::size_t j = i + 1; j < tau.size(); ++j)
      if (tau[i] == tau[j]) throw PreconditionError("tau is not injective");
}

Rational evaluate(const RationalFn& f, const Vec& point) {
  return f.numerator().evaluate(point) / f.denominator().evaluate(point);
}

}  // namespace

FiniteCoh finite_coh_decompose(const std::vector<Vec>& tau, const std::vector<MultiPoly>& g) {
  if (tau.size() != g.size() || tau.empty()) throw ContextMismatch("finite_coh_decompose: one value per point");
  check_injective(tau);
  int nv = static_cast<int>(tau.front().size());
  int k = static_cast<int>(tau.size());
  std::vector<MultiPoly> nodes;
  for (const auto& t : tau) nodes.push_back(MultiPoly::linear(t));
  auto inv = vandermonde_inverse_symbolic(nodes);

  FiniteCoh out;
  out.member = true;
  for (int i = 0; i < k; ++i) {
    RationalFn gi(nv);
    for (int j = 0; j < k; ++j) gi += inv[i][j] * RationalFn(g[j]);
    out.member = out.member && gi.is_polynomial();
    out.coeffs.push_back(std::move(gi));
  }

  for (int j = 0; j < k; ++j) {
    RationalFn back(nv);
    RationalFn power(MultiPoly::constant(nv, 1));
    for (int i = 0; i < k; ++i) {
      back += out.coeffs[i] * power;
      power *= RationalFn(nodes[j]);
    }
    if (!(back == RationalFn(g[j]))) out.crosscheck_ok = false;
  }

  std::mt19937_64 rng(0x5eed + k);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Vec point(nv);
    for (auto& p : point) {
      p = Rational(dist(rng), 1 + (dist(rng) + 50) % 7);
      p.canonicalize();
    }
    std::vector<Rational> X;
    for (const auto& n : nodes) X.push_back(n.evaluate(point));
    bool usable = true;
    for (int a = 0; a < k && usable; ++a)
      for (int b = a + 1; b < k; ++b)
        if (X[a] == X[b]) usable = false;
    if (!usable) continue;
    auto direct = vandermonde(X).inverse();
    for (int i = 0; i < k; ++i) {
      Rational expect = 0;
      for (int j = 0; j < k; ++j) expect += direct->at(i, j) * g[j].evaluate(point);
      if (expect != evaluate(out.coeffs[i], point)) out.crosscheck_ok = false;
    }
    break;
  }
  return out;
}

int finite_coh_dimension(const std::vector<Vec>& tau, int m) {
  if (tau.empty()) return 0;
  check_injective(tau);
  int nv = static_cast<int>(tau.front().size());
  MonomialIndex idx(nv, m);
  std::vector<SparseRow> rows;
  for (int k = 0; k < static_cast<int>(tau.size()) && k <= m; ++k) {
    for (const auto& mono : monomials_of_degree(nv, m - k)) {
      std::vector<MultiPoly> values;
      for (const auto& t : tau) values.push_back(MultiPoly::term(nv, mono, 1) * MultiPoly::linear(t).pow(k));
      rows.push_back(to_sparse(idx.flatten(values)));
    }
  }
  return rank_of(std::move(rows), idx.size() * static_cast<int>(tau.size()));
}

// ------------------------------------------------------------------ hyperedge membership

namespace {

/// Per-hyperedge data for the divisibility test: the numerator
/// sum_e w_e f(e) beta_e^j K(tau_q)(e) must be divisible by label^mu.
struct HyperedgeTest {
  const Hyperedge* E = nullptr;
  std::vector<Rational> weight;                // per member of E
  std::vector<std::vector<MultiPoly>> kfam;    // [q][member of E]
  std::vector<std::vector<MultiPoly>> bpow;    // [j][member of E]
};

HyperedgeTest prepare(const Skeleton& s, const CrossSection& cs, const SliceAtlas& atlas, const Hyperedge& E) {
  const auto& ac = atlas.components.at(E.atlas_index);
  if (!ac.family_ok) throw PreconditionError("slice component without a generating family");
  HyperedgeTest t;
  t.E = &E;
  const Vec& ell = E.label_y;
  std::set<Vec, VecLess> distinct;
  for (int pos : E.members) {
    int e = cs.members[pos];
    auto forms = projected_others(s, cs, e, component_edges_at(ac.slice.comp, s, s.edge(e).src));
    Rational c = 1;
    int piv = pivot_index(ell);
    for (const auto& f : forms) {
      if (!parallel(f, ell)) throw InconsistencyError("component weight outside the hyperedge line");
      c *= f[piv] / ell[piv];
    }
    t.weight.push_back(Rational(1) / (cs.m[pos] * c));
    distinct.insert(cs.beta[pos]);
  }
  for (const auto& cls : ac.family) {
    std::vector<MultiPoly> row;
    for (int pos : E.members) {
      const auto& ed = s.edge(cs.members[pos]);
      row.push_back(cs.pb.restrict_along(cls.values[ed.src], ed.alpha));
    }
    t.kfam.push_back(std::move(row));
  }
  int B = static_cast<int>(distinct.size());
  for (int j = 0; j < B; ++j) {
    std::vector<MultiPoly> row;
    for (int pos : E.members) row.push_back(MultiPoly::linear(cs.beta[pos]).pow(j));
    t.bpow.push_back(std::move(row));
  }
  return t;
}

bool divisible_by_power(MultiPoly p, const Vec& ell, int mu) {
  for (int k = 0; k < mu; ++k) {
    auto q = divides_exactly(p, ell);
    if (!q) return false;
    p = std::move(*q);
  }
  return true;
}

}  // namespace

MembershipReport membership_Hc(const Skeleton& s, const CrossSection& cs, const SliceAtlas& atlas,
                               const std::vector<MultiPoly>& values) {
  if (values.size() != cs.members.size()) throw ContextMismatch("membership_Hc: one value per cross-section vertex");
  MembershipReport rep;
  rep.per_hyperedge.assign(cs.hyperedges.size(), true);
  parallel_for(static_cast<int>(cs.hyperedges.size()), [&](int h) {
    const auto& E = cs.hyperedges[h];
    auto t = prepare(s, cs, atlas, E);
    bool ok = true;
    for (std::size_t q = 0; q < t.kfam.size() && ok; ++q)
      for (std::size_t j = 0; j < t.bpow.size() && ok; ++j) {
        MultiPoly N(cs.ydim());
        for (std::size_t i = 0; i < E.members.size(); ++i)
          N += values[E.members[i]] * t.bpow[j][i] * t.kfam[q][i] * t.weight[i];
        ok = divisible_by_power(N, E.label_y, E.mu);
      }
    rep.per_hyperedge[h] = ok;
  });
  rep.member = std::all_of(rep.per_hyperedge.begin(), rep.per_hyperedge.end(), [](bool b) { return b; });
  return rep;
}

int level_dimension(const Skeleton& s, const CrossSection& cs, const SliceAtlas& atlas, int m) {
  int nv = cs.ydim();
  MonomialIndex idx(nv, m);
  int nmem = static_cast<int>(cs.members.size());
  int ncols = idx.size() * nmem;
  if (ncols == 0) return 0;
  std::vector<std::vector<SparseRow>> per_edge(cs.hyperedges.size());
  parallel_for(static_cast<int>(cs.hyperedges.size()), [&](int h) {
    const auto& E = cs.hyperedges[h];
    auto t = prepare(s, cs, atlas, E);
    for (std::size_t q = 0; q < t.kfam.size(); ++q)
      for (std::size_t j = 0; j < t.bpow.size(); ++j) {
        std::map<Monomial, std::map<int, Rational>, GrlexGreater> rows;
        for (std::size_t i = 0; i < E.members.size(); ++i) {
          MultiPoly base = t.bpow[j][i] * t.kfam[q][i] * t.weight[i];
          if (base.is_zero()) continue;
          for (int mi = 0; mi < idx.size(); ++mi) {
            MultiPoly contrib = base * MultiPoly::term(nv, idx.monomials()[mi], 1);
            int piv = 0;
            MultiPoly lc = in_linear_coordinate(contrib, E.label_y, &piv);
            int col = E.members[i] * idx.size() + mi;
            for (const auto& [mono, coeff] : lc.terms())
              if (mono.exp[piv] < E.mu) rows[mono][col] += coeff;
          }
        }
        for (auto& [mono, entries] : rows) {
          SparseRow r;
          for (auto& [col, v] : entries)
            if (v != 0) r.emplace_back(col, v);
          if (!r.empty()) per_edge[h].push_back(std::move(r));
        }
      }
  });
  std::vector<SparseRow> all;
  for (auto& rows : per_edge)
    for (auto& r : rows) all.push_back(std::move(r));
  return ncols - rank_of(std::move(all), ncols);
}

int kirwan_rank(const Skeleton& s, const CrossSection& cs, const std::vector<CohomologyClass>& classes, int m) {
  MonomialIndex idx(cs.ydim(), m);
  std::vector<SparseRow> rows;
  for (const auto& c : classes) {
    if (c.degree != m) continue;
    rows.push_back(to_sparse(idx.flatten(kirwan(s, cs, c.values))));
  }
  return rank_of(std::move(rows), idx.size() * static_cast<int>(cs.members.size()));
}

GammaSlice gamma_slice(const CrossSection& cs, const Vec& gamma) {
  if (is_zero(gamma)) throw PreconditionError("gamma_slice: gamma = 0");
  GammaSlice out;
  std::set<int> seen;
  for (std::size_t h = 0; h < cs.hyperedges.size(); ++h) {
    if (!parallel(cs.hyperedges[h].label_y, gamma)) continue;
    out.hyperedges.push_back(static_cast<int>(h));
    for (int pos : cs.hyperedges[h].members)
      if (!seen.insert(pos).second) out.totally_disconnected = false;
  }
  return out;
}

}  // namespace gkm
