#include "gkmlab/integration.hpp"

#include <algorithm>

#include "gkmlab/error.hpp"

namespace gkm {

RationalFn integrate(const Skeleton& s, const std::vector<MultiPoly>& values) {
  if (static_cast<int>(values.size()) != s.num_vertices()) throw ContextMismatch("integrate: one value per vertex expected");
  RationalFn total(s.dim());
  for (int p = 0; p < s.num_vertices(); ++p) {
    if (values[p].is_zero()) continue;
    std::vector<Vec> forms;
    for (int e : s.out(p)) forms.push_back(s.edge(e).alpha);
    total += RationalFn(values[p]) * RationalFn::inverse_of_product(s.dim(), forms);
  }
  return total;
}

bool verify_integrality(const Skeleton& s, const std::vector<MultiPoly>& values) {
  return integrate(s, values).is_polynomial();
}

CohomologyClass edge_thom(const Skeleton& s, int e) {
  const auto& ed = s.edge(e);
  CohomologyClass c;
  c.degree = static_cast<int>(s.out(ed.src).size()) - 1;
  c.values.assign(s.num_vertices(), MultiPoly(s.dim()));
  for (auto [v, skip] : {std::pair{ed.src, e}, std::pair{ed.dst, ed.rev}}) {
    MultiPoly prod = MultiPoly::constant(s.dim(), 1);
    for (int f : s.out(v))
      if (f != skip) prod *= MultiPoly::linear(s.edge(f).alpha);
    c.values[v] = prod;
  }
  if (class_violation(s, c.values)) throw InconsistencyError("edge Thom class fails the compatibility condition");
  return c;
}

CohomologyClass component_thom(const Skeleton& s, const Component& comp) {
  CohomologyClass c;
  c.values.assign(s.num_vertices(), MultiPoly(s.dim()));
  std::vector<bool> in_comp(s.num_edges(), false);
  for (int e : comp.parent_edge) in_comp[e] = true;
  for (int pv : comp.parent_vertex) {
    MultiPoly prod = MultiPoly::constant(s.dim(), 1);
    int deg = 0;
    for (int e : s.out(pv))
      if (!in_comp[e]) {
        prod *= MultiPoly::linear(s.edge(e).alpha);
        ++deg;
      }
    c.values[pv] = prod;
    c.degree = deg;
  }
  if (class_violation(s, c.values)) throw InconsistencyError("component Thom class fails the compatibility condition");
  return c;
}

DualityReport duality_test(const Skeleton& s, const std::vector<GeneratingResult>& family,
                           const std::vector<MultiPoly>& values, int max_degree) {
  if (!family_complete(family)) throw PreconditionError("duality test needs a complete generating family");
  DualityReport rep;
  rep.is_class = !class_violation(s, values);
  for (const auto& g : family) {
    for (int k = 0; g.cls.degree + k <= max_degree && rep.products_integral; ++k) {
      for (const auto& mono : monomials_of_degree(s.dim(), k)) {
        MultiPoly factor = MultiPoly::term(s.dim(), mono, 1);
        std::vector<MultiPoly> prod(s.num_vertices(), MultiPoly(s.dim()));
        for (int v = 0; v < s.num_vertices(); ++v)
          if (!g.cls.values[v].is_zero()) prod[v] = values[v] * g.cls.values[v] * factor;
        ++rep.products_checked;
        if (!integrate(s, prod).is_polynomial()) {
          rep.products_integral = false;
          rep.failing_degree = g.cls.degree + k;
          rep.failing_vertex = g.vertex;
          break;
        }
      }
    }
    if (!rep.products_integral) break;
  }
  rep.agree = rep.products_integral == rep.is_class;
  return rep;
}

}  // namespace gkm
