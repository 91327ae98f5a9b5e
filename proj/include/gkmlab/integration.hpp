#pragma once

#include <optional>
#include <vector>

#include "gkmlab/cohomology.hpp"

namespace gkm {

/// sum_p f_p / prod_{e in E_p} alpha_e, over all d oriented edges out of p.
RationalFn integrate(const Skeleton& s, const std::vector<MultiPoly>& values);

bool verify_integrality(const Skeleton& s, const std::vector<MultiPoly>& values);

/// Thom class of an edge: product of the other weights at each endpoint.
CohomologyClass edge_thom(const Skeleton& s, int e);

/// Product over E_q minus the component edges at each component vertex, 0 elsewhere.
CohomologyClass component_thom(const Skeleton& s, const Component& comp);

struct DualityReport {
  bool products_integral = true;
  bool is_class = true;
  bool agree = true;
  int products_checked = 0;
  int failing_degree = -1;
  int failing_vertex = -1;  // generator tau^(p) of the first failing product
};

/// Checks int f*h in S(g*) for h = monomial * tau^(p) with deg h <= max_degree,
/// and compares with the direct compatibility test. Throws if the family is
/// incomplete.
DualityReport duality_test(const Skeleton& s, const std::vector<GeneratingResult>& family,
                           const std::vector<MultiPoly>& values, int max_degree);

}  // namespace gkm
