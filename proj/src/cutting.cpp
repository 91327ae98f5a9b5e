#include "gkmlab/cutting.hpp"

#include <algorithm>

#include "gkmlab/error.hpp"

namespace gkm {

namespace {

std::string fresh_label(const SpaceCtx& ctx) {
  std::string label = "t";
  while (std::find(ctx.labels().begin(), ctx.labels().end(), label) != ctx.labels().end()) label += "'";
  return label;
}

Vec lift(const Vec& v, const Rational& last) {
  Vec out = v;
  out.push_back(last);
  return out;
}

}  // namespace

Rational ProductSkeleton::window_low() const {
  return *std::max_element(base_morse.phi.begin(), base_morse.phi.end());
}

Rational ProductSkeleton::window_high() const {
  return *std::min_element(base_morse.phi.begin(), base_morse.phi.end()) + a;
}

Rational ProductSkeleton::window_level() const { return (window_low() + window_high()) / 2; }

ProductSkeleton cut_product(const Skeleton& s, const MorseData& md, std::optional<Rational> a) {
  auto [lo, hi] = std::minmax_element(md.phi.begin(), md.phi.end());
  Rational spread = *hi - *lo;
  ProductSkeleton ps;
  ps.base = s;
  ps.base_morse = md;
  ps.a = a ? *a : spread + 1;
  if (!(ps.a > spread)) throw PreconditionError("cut: a must exceed phi_max - phi_min = " + to_display(spread));

  int n = s.dim();
  auto ctx = s.ctx().extended(fresh_label(s.ctx()));
  std::vector<std::string> ids;
  for (const auto& id : s.ids()) {
    ids.push_back(id + "|0");
    ids.push_back(id + "|1");
  }
  std::vector<UnorientedEdge> edges;
  for (int e : s.unoriented()) {
    const auto& ed = s.edge(e);
    for (const char* t : {"|0", "|1"}) edges.push_back({s.id(ed.src) + t, s.id(ed.dst) + t, lift(ed.alpha, 0)});
  }
  Vec unit(n + 1);
  unit[n] = 1;
  for (const auto& id : s.ids()) edges.push_back({id + "|0", id + "|1", unit});
  ps.product = Skeleton::from_unoriented(ctx, ids, edges);

  ps.level0.resize(s.num_vertices());
  ps.level1.resize(s.num_vertices());
  ps.vertical.assign(s.num_vertices(), -1);
  for (int p = 0; p < s.num_vertices(); ++p) {
    ps.level0[p] = ps.product.index_of(s.id(p) + "|0");
    ps.level1[p] = ps.product.index_of(s.id(p) + "|1");
    for (int e : ps.product.out(ps.level0[p]))
      if (ps.product.edge(e).dst == ps.level1[p]) ps.vertical[p] = e;
  }

  ps.axioms = validate_axioms(ps.product);
  Vec xi_flat = lift(md.xi, 1);
  ps.acyclic = orient_and_check_acyclic(ps.product, xi_flat).acyclic;
  if (!ps.acyclic) throw InconsistencyError("product orientation has a cycle");
  std::vector<Rational> Phi(ps.product.num_vertices());
  for (int p = 0; p < s.num_vertices(); ++p) {
    Phi[ps.level0[p]] = md.phi[p];
    Phi[ps.level1[p]] = md.phi[p] + ps.a;
  }
  ps.morse = morse_from_function(ps.product, xi_flat, std::move(Phi));

  ps.index_ok = true;
  for (int p = 0; p < s.num_vertices(); ++p)
    if (ps.morse.sigma[ps.level0[p]] != md.sigma[p] || ps.morse.sigma[ps.level1[p]] != md.sigma[p] + 1)
      ps.index_ok = false;
  ps.betti_ok = ps.morse.betti.size() == md.betti.size() + 1;
  for (std::size_t k = 0; ps.betti_ok && k < ps.morse.betti.size(); ++k) {
    int expect = (k < md.betti.size() ? md.betti[k] : 0) + (k > 0 ? md.betti[k - 1] : 0);
    if (ps.morse.betti[k] != expect) ps.betti_ok = false;
  }
  return ps;
}

namespace {

void check_window(const ProductSkeleton& ps, const CrossSection& cs) {
  if (!(ps.window_low() < cs.c && cs.c < ps.window_high()))
    throw PreconditionError("level " + to_display(cs.c) + " is outside the window (" + to_display(ps.window_low()) +
                            ", " + to_display(ps.window_high()) + ")");
  if (cs.members.size() != ps.vertical.size()) throw ContextMismatch("cross-section does not belong to this product");
}

}  // namespace

std::vector<MultiPoly> rho_star(const ProductSkeleton& ps, const CrossSection& cs, const std::vector<MultiPoly>& g) {
  check_window(ps, cs);
  if (g.size() != cs.members.size()) throw ContextMismatch("rho_star: one value per cross-section vertex");
  int n = ps.base.dim();
  std::vector<MultiPoly> images;
  for (const auto& y : cs.pb.y()) images.push_back(MultiPoly::linear(Vec(y.begin(), y.begin() + n)));
  std::vector<MultiPoly> out;
  for (int p = 0; p < ps.base.num_vertices(); ++p) {
    int pos = cs.position(ps.vertical[p]);
    if (pos < 0) throw InconsistencyError("vertical edge missing from the window cross-section");
    out.push_back(g[pos].substitute(images, n));
  }
  return out;
}

std::vector<MultiPoly> rho_inverse(const ProductSkeleton& ps, const CrossSection& cs, const std::vector<MultiPoly>& f) {
  check_window(ps, cs);
  if (static_cast<int>(f.size()) != ps.base.num_vertices()) throw ContextMismatch("rho_inverse: one value per vertex");
  int n = ps.base.dim();
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) {
    Vec lifted(n + 1);
    lifted[i] = 1;
    lifted[n] = -ps.base_morse.xi[i];
    images.push_back(MultiPoly::linear(cs.pb.to_y(lifted)));
  }
  std::vector<MultiPoly> out(cs.members.size(), MultiPoly(cs.ydim()));
  for (int p = 0; p < ps.base.num_vertices(); ++p) out[cs.position(ps.vertical[p])] = f[p].substitute(images, cs.ydim());
  return out;
}

}  // namespace gkm
