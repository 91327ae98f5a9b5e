#include "gkmlab/cohomology.hpp"

#include <algorithm>
#include <random>

#include "gkmlab/error.hpp"
#include "gkmlab/linalg.hpp"
#include "gkmlab/parallel.hpp"

namespace gkm {

std::optional<int> class_violation(const Skeleton& s, const std::vector<MultiPoly>& values) {
  if (static_cast<int>(values.size()) != s.num_vertices()) throw ContextMismatch("class: one value per vertex expected");
  for (int e : s.unoriented()) {
    const auto& ed = s.edge(e);
    if (!divides_exactly(values[ed.src] - values[ed.dst], ed.alpha)) return e;
  }
  return std::nullopt;
}

bool is_class(const Skeleton& s, const std::vector<MultiPoly>& values) {
  int deg = -1;
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    if (!v.is_homogeneous()) throw PreconditionError("class values must be homogeneous");
    if (deg >= 0 && v.degree() != deg) throw PreconditionError("class values have mixed degrees");
    deg = v.degree();
  }
  return !class_violation(s, values);
}

std::uint64_t betti_formula(const std::vector<int>& betti, int m, int n) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < betti.size(); ++k)
    total += static_cast<std::uint64_t>(betti[k]) * graded_dim(m - static_cast<int>(k), n);
  return total;
}

// ---------------------------------------------------------------- MonomialIndex

MonomialIndex::MonomialIndex(int nvars, int degree) : nvars_(nvars), monos_(monomials_of_degree(nvars, degree)) {
  for (std::size_t i = 0; i < monos_.size(); ++i) where_.emplace(monos_[i], static_cast<int>(i));
}

int MonomialIndex::at(const Monomial& m) const {
  auto it = where_.find(m);
  if (it == where_.end()) throw PreconditionError("monomial outside the graded piece");
  return it->second;
}

Vec MonomialIndex::flatten(const std::vector<MultiPoly>& values) const {
  Vec out(values.size() * monos_.size());
  for (std::size_t v = 0; v < values.size(); ++v)
    for (const auto& [m, c] : values[v].terms()) out[v * monos_.size() + at(m)] = c;
  return out;
}

std::vector<MultiPoly> MonomialIndex::unflatten(const Vec& coords, int nvertices) const {
  std::vector<MultiPoly> out(nvertices, MultiPoly(nvars_));
  for (int v = 0; v < nvertices; ++v)
    for (std::size_t j = 0; j < monos_.size(); ++j) {
      const auto& c = coords[v * monos_.size() + j];
      if (sgn(c) != 0) out[v].add_term(monos_[j], c);
    }
  return out;
}

// ---------------------------------------------------------------- linear systems

namespace {

/// restrict_mod of every monomial of the index, shared across edges with
/// parallel weights.
class RestrictionCache {
 public:
  explicit RestrictionCache(const MonomialIndex& idx) : idx_(idx) {}

  const std::vector<MultiPoly>& get(const Vec& alpha) {
    Vec key = normalized_first_one(alpha);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<MultiPoly> images;
    for (const auto& m : idx_.monomials()) images.push_back(restrict_mod(MultiPoly::term(idx_.nvars(), m, 1), key));
    return cache_.emplace(key, std::move(images)).first->second;
  }

 private:
  const MonomialIndex& idx_;
  std::map<Vec, std::vector<MultiPoly>, VecLess> cache_;
};

/// Rows of sum over sides of sign * r_e(f_side) = rhs, keyed by quotient monomial.
class EdgeEquations {
 public:
  void add_unknown(const MultiPoly& image, int column, int sign) {
    for (const auto& [m, c] : image.terms()) {
      auto& row = rows_[m].first;
      row[column] += sign * c;
    }
  }
  void add_known(const MultiPoly& value, int sign) {
    for (const auto& [m, c] : value.terms()) rows_[m].second -= sign * c;
  }
  void flush(std::vector<SparseRow>& rows, Vec& rhs) {
    for (auto& [m, entry] : rows_) {
      SparseRow r;
      for (auto& [col, v] : entry.first)
        if (sgn(v) != 0) r.emplace_back(col, v);
      if (r.empty() && sgn(entry.second) == 0) continue;
      rows.push_back(std::move(r));
      rhs.push_back(entry.second);
    }
    rows_.clear();
  }

 private:
  std::map<Monomial, std::pair<std::map<int, Rational>, Rational>, GrlexGreater> rows_;
};

std::vector<SparseRow> compatibility_rows(const Skeleton& s, const MonomialIndex& idx) {
  int L = idx.size();
  RestrictionCache cache(idx);
  std::vector<SparseRow> rows;
  Vec rhs;
  for (int e : s.unoriented()) {
    const auto& ed = s.edge(e);
    const auto& images = cache.get(ed.alpha);
    EdgeEquations eq;
    for (int j = 0; j < L; ++j) {
      eq.add_unknown(images[j], ed.src * L + j, 1);
      eq.add_unknown(images[j], ed.dst * L + j, -1);
    }
    eq.flush(rows, rhs);
  }
  return rows;
}

}  // namespace

std::vector<CohomologyClass> basis_H(const Skeleton& s, int m) {
  MonomialIndex idx(s.dim(), m);
  int nv = s.num_vertices();
  auto ns = nullspace(rref(compatibility_rows(s, idx), nv * idx.size()));
  std::vector<CohomologyClass> out;
  for (const auto& v : ns.basis) out.push_back(CohomologyClass{m, idx.unflatten(v, nv)});
  return out;
}

int dim_H(const Skeleton& s, int m) {
  MonomialIndex idx(s.dim(), m);
  int ncols = s.num_vertices() * idx.size();
  return ncols - rank_of(compatibility_rows(s, idx), ncols);
}

MultiPoly downward_product(const Skeleton& s, const MorseData& md, int p) {
  MultiPoly prod = MultiPoly::constant(s.dim(), 1);
  for (int e : s.out(p))
    if (!md.up[e]) prod *= MultiPoly::linear(s.edge(e).alpha);
  return prod;
}

GeneratingResult find_generating_class(const Skeleton& s, const MorseData& md, int p) {
  GeneratingResult res;
  res.vertex = p;
  int nv = s.num_vertices();
  int deg = md.sigma[p];
  MonomialIndex idx(s.dim(), deg);
  int L = idx.size();
  MultiPoly fp = downward_product(s, md, p);

  auto F = flow_up(s, md, p);
  std::vector<int> slot(nv, -2);  // -2 outside F_p, -1 the vertex p, else unknown block
  std::vector<int> unknowns;
  for (int q : F) {
    if (q == p) {
      slot[q] = -1;
    } else {
      slot[q] = static_cast<int>(unknowns.size());
      unknowns.push_back(q);
    }
  }
  res.sharpening = std::all_of(unknowns.begin(), unknowns.end(), [&](int q) { return md.sigma[q] > deg; });
  int ncols = static_cast<int>(unknowns.size()) * L;

  RestrictionCache cache(idx);
  std::vector<SparseRow> rows;
  Vec rhs;
  for (int e : s.unoriented()) {
    const auto& ed = s.edge(e);
    if (slot[ed.src] == -2 && slot[ed.dst] == -2) continue;
    const auto& images = cache.get(ed.alpha);
    EdgeEquations eq;
    auto side = [&](int v, int sign) {
      if (slot[v] == -1) {
        eq.add_known(restrict_mod(fp, ed.alpha), sign);
      } else if (slot[v] >= 0) {
        for (int j = 0; j < L; ++j) eq.add_unknown(images[j], slot[v] * L + j, sign);
      }
    };
    side(ed.src, 1);
    side(ed.dst, -1);
    eq.flush(rows, rhs);
  }

  std::vector<SparseRow> hom = rows;
  int rank = rank_of(std::move(hom), ncols);
  auto sol = solve(rows, rhs, ncols);
  if (!sol) return res;
  res.found = true;
  res.unique = rank == ncols;
  if (!res.unique) {
    // Greedy support reduction in vertex order.
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      auto trial_rows = rows;
      Vec trial_rhs = rhs;
      for (int j = 0; j < L; ++j) {
        trial_rows.push_back(SparseRow{{static_cast<int>(k) * L + j, Rational(1)}});
        trial_rhs.push_back(0);
      }
      auto t = solve(trial_rows, trial_rhs, ncols);
      if (t) {
        rows = std::move(trial_rows);
        rhs = std::move(trial_rhs);
        sol = std::move(t);
      }
    }
  }
  res.cls.degree = deg;
  res.cls.values.assign(nv, MultiPoly(s.dim()));
  res.cls.values[p] = fp;
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    for (int j = 0; j < L; ++j) {
      const auto& c = (*sol)[k * L + j];
      if (sgn(c) != 0) res.cls.values[unknowns[k]].add_term(idx.monomials()[j], c);
    }
  if (class_violation(s, res.cls.values))
    throw InconsistencyError("generating class at " + s.id(p) + " fails the compatibility condition");
  return res;
}

std::vector<GeneratingResult> generating_family(const Skeleton& s, const MorseData& md) {
  std::vector<GeneratingResult> out(s.num_vertices());
  parallel_for(s.num_vertices(), [&](int p) { out[p] = find_generating_class(s, md, p); });
  return out;
}

bool family_complete(const std::vector<GeneratingResult>& family) {
  return std::all_of(family.begin(), family.end(), [](const GeneratingResult& g) { return g.found; });
}

int family_span_rank(const Skeleton& s, const std::vector<GeneratingResult>& family, int m) {
  MonomialIndex idx(s.dim(), m);
  int ncols = s.num_vertices() * idx.size();
  std::vector<SparseRow> rows;
  for (const auto& g : family) {
    if (!g.found || g.cls.degree > m) continue;
    for (const auto& mono : monomials_of_degree(s.dim(), m - g.cls.degree)) {
      MultiPoly factor = MultiPoly::term(s.dim(), mono, 1);
      std::vector<MultiPoly> vals;
      for (const auto& v : g.cls.values) vals.push_back(v * factor);
      rows.push_back(to_sparse(idx.flatten(vals)));
    }
  }
  return rank_of(std::move(rows), ncols);
}

PackageReport check_morse_package(const Skeleton& s, const MorseData& md, int max_degree) {
  PackageReport rep;
  rep.family = generating_family(s, md);
  rep.verdict = family_complete(rep.family);
  std::vector<DegreeCheck> checks(max_degree + 1);
  parallel_for(max_degree + 1, [&](int m) {
    DegreeCheck c;
    c.m = m;
    c.dim_h = dim_H(s, m);
    c.formula = betti_formula(md.betti, m, s.dim());
    if (rep.verdict) c.span_rank = family_span_rank(s, rep.family, m);
    checks[m] = c;
  });
  rep.degrees = std::move(checks);
  rep.dims_ok = std::all_of(rep.degrees.begin(), rep.degrees.end(), [](const DegreeCheck& c) { return c.ok(); });
  return rep;
}

// ---------------------------------------------------------------- two-dimensional reduction

namespace {

const std::vector<std::string> kSliceLabels = {"z1", "z2"};

// eta_j in g with b_i(eta_j) = delta_ij.
std::vector<Vec> dual_vectors(const Subspace& h) {
  const auto& B = h.basis();
  int n = static_cast<int>(B.front().size());
  std::vector<Vec> etas;
  for (std::size_t j = 0; j < B.size(); ++j) {
    std::vector<SparseRow> rows;
    Vec rhs(B.size());
    for (const auto& b : B) rows.push_back(to_sparse(b));
    rhs[j] = 1;
    auto x = solve(std::move(rows), rhs, n);
    if (!x) throw InconsistencyError("subspace basis is degenerate");
    etas.push_back(*x);
  }
  return etas;
}

Vec local_xi(const Subspace& h, const Vec& xi) {
  Vec out;
  for (const auto& b : h.basis()) out.push_back(dot(b, xi));
  return out;
}

bool usable_xi(const Skeleton& g, const Vec& xi) {
  return is_polarizing(g, xi).ok && is_generic(g, xi).ok && orient_and_check_acyclic(g, xi).acyclic;
}

}  // namespace

std::vector<MultiPoly> restrict_sharp(const Component& comp, const Subspace& h, const std::vector<MultiPoly>& values,
                                      const Vec& xi_k) {
  for (const auto& b : h.basis())
    if (sgn(dot(b, xi_k)) != 0) throw PreconditionError("xi_k does not annihilate the subspace");
  auto etas = dual_vectors(h);
  int n = static_cast<int>(xi_k.size());
  int k = h.dim();
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) {
    MultiPoly im = MultiPoly::constant(k, xi_k[i]);
    for (int j = 0; j < k; ++j) im += MultiPoly::variable(k, j) * etas[j][i];
    images.push_back(std::move(im));
  }
  std::vector<MultiPoly> out;
  for (int pv : comp.parent_vertex) out.push_back(values.at(pv).substitute(images));
  return out;
}

InducedClass induced_generating_class(const Skeleton& s, const MorseData& md, const CohomologyClass& tau, int p,
                                      const Subspace& h, const Component& comp, std::uint64_t seed) {
  auto it = std::find(comp.parent_vertex.begin(), comp.parent_vertex.end(), p);
  if (it == comp.parent_vertex.end()) throw PreconditionError("vertex is not in the component");
  int p_local = static_cast<int>(it - comp.parent_vertex.begin());

  std::vector<Vec> outside;
  for (int e : s.out(p))
    if (!md.up[e] && !h.contains(s.edge(e).alpha)) outside.push_back(s.edge(e).alpha);

  InducedClass ic;
  int n = s.dim();
  ic.xi_k = Vec(n);
  if (!outside.empty()) {
    std::vector<SparseRow> rows;
    for (const auto& b : h.basis()) rows.push_back(to_sparse(b));
    auto kernel = nullspace(rref(std::move(rows), n)).basis;
    std::mt19937_64 rng(seed);
    bool done = false;
    for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
      long bound = 2L << std::min(attempt / 16, 30);
      std::uniform_int_distribution<long> dist(-bound, bound);
      Vec cand(n);
      for (const auto& kv : kernel) cand = add(cand, scaled(kv, Rational(dist(rng))));
      done = std::all_of(outside.begin(), outside.end(), [&](const Vec& a) { return sgn(dot(a, cand)) != 0; });
      if (done) ic.xi_k = cand;
    }
    if (!done) throw PreconditionError("no xi_k in the annihilator avoids the downward weights");
  }
  for (const auto& a : outside) ic.c *= dot(a, ic.xi_k);
  ic.degree = tau.degree - static_cast<int>(outside.size());

  auto sharp = restrict_sharp(comp, h, tau.values, ic.xi_k);
  for (auto& v : sharp) ic.values.push_back((v * Rational(1 / ic.c)).homogeneous_part(ic.degree));

  Skeleton local = reexpress(comp.graph, h, kSliceLabels);
  MorseData lmd = canonical_morse(local, local_xi(h, md.xi));
  ic.is_class = !class_violation(local, ic.values);
  ic.leading_ok = ic.values[p_local] == downward_product(local, lmd, p_local);
  auto F = flow_up(local, lmd, p_local);
  ic.support_ok = true;
  for (int q = 0; q < local.num_vertices(); ++q)
    if (!std::binary_search(F.begin(), F.end(), q) && !ic.values[q].is_zero()) ic.support_ok = false;
  return ic;
}

SliceComponent analyze_slice_component(const Component& comp, const Subspace& h, const Vec& xi, std::uint64_t seed) {
  SliceComponent sc;
  sc.comp = comp;
  sc.local = reexpress(comp.graph, h, kSliceLabels);
  sc.xi = local_xi(h, xi);
  if (!usable_xi(sc.local, sc.xi)) {
    sc.xi_reused = false;
    sc.xi = find_xi(sc.local, 400, seed);
  }
  sc.morse = canonical_morse(sc.local, sc.xi);
  sc.family = generating_family(sc.local, sc.morse);
  sc.passes = family_complete(sc.family);
  return sc;
}

ReductionReport two_dim_reduction_check(const Skeleton& s, const MorseData& md, std::uint64_t seed) {
  ReductionReport rep;
  rep.full_pass = family_complete(generating_family(s, md));
  for (const auto& h : enumerate_2d_subspaces(s)) {
    SliceReport sr;
    sr.h = h;
    for (const auto& comp : subskeleton(s, h)) {
      if (comp.valence < 0) {
        sr.skipped_irregular = true;
        rep.warnings.push_back("irregular component skipped in span " + to_string(h.basis()[0]) + "," +
                               to_string(h.basis()[1]));
        continue;
      }
      auto sc = analyze_slice_component(comp, h, md.xi, seed);
      rep.slices_pass = rep.slices_pass && sc.passes;
      sr.components.push_back(std::move(sc));
    }
    rep.slices.push_back(std::move(sr));
  }
  rep.consistent = rep.slices_pass == rep.full_pass;
  return rep;
}

}  // namespace gkm
