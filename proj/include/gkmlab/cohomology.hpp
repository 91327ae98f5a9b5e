#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkmlab/morse.hpp"

namespace gkm {

/// f in H(Gamma, alpha): one homogeneous polynomial per vertex.
struct CohomologyClass {
  int degree = 0;
  std::vector<MultiPoly> values;
};

/// First unoriented edge along which f_src - f_dst is not divisible by alpha,
/// or nullopt. No homogeneity requirement.
std::optional<int> class_violation(const Skeleton& s, const std::vector<MultiPoly>& values);

/// Throws PreconditionError on values of mixed degree.
bool is_class(const Skeleton& s, const std::vector<MultiPoly>& values);

/// sum_k b_k * dim S^{m-k} of an n-dimensional space.
std::uint64_t betti_formula(const std::vector<int>& betti, int m, int n);

/// Index of each monomial of a fixed degree, and the flattening of a map
/// V -> S^m into one coordinate vector.
class MonomialIndex {
 public:
  MonomialIndex(int nvars, int degree);
  int size() const { return static_cast<int>(monos_.size()); }
  int nvars() const { return nvars_; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  int at(const Monomial& m) const;
  Vec flatten(const std::vector<MultiPoly>& values) const;
  std::vector<MultiPoly> unflatten(const Vec& coords, int nvertices) const;

 private:
  int nvars_;
  std::vector<Monomial> monos_;
  std::map<Monomial, int, GrlexGreater> where_;
};

std::vector<CohomologyClass> basis_H(const Skeleton& s, int m);
int dim_H(const Skeleton& s, int m);

/// Product of alpha_e over the downward edges of E_p.
MultiPoly downward_product(const Skeleton& s, const MorseData& md, int p);

struct GeneratingResult {
  int vertex = -1;
  bool found = false;
  bool unique = false;
  bool sharpening = false;  // every other vertex of F_p has larger index
  CohomologyClass cls;
};

GeneratingResult find_generating_class(const Skeleton& s, const MorseData& md, int p);
std::vector<GeneratingResult> generating_family(const Skeleton& s, const MorseData& md);
bool family_complete(const std::vector<GeneratingResult>& family);

/// Rank of the S(g*)-span of the family in degree m.
int family_span_rank(const Skeleton& s, const std::vector<GeneratingResult>& family, int m);

struct DegreeCheck {
  int m = 0;
  int dim_h = 0;
  std::uint64_t formula = 0;
  int span_rank = -1;
  bool ok() const { return static_cast<std::uint64_t>(dim_h) == formula && (span_rank < 0 || dim_h == span_rank); }
};

struct PackageReport {
  bool verdict = false;
  bool dims_ok = true;
  std::vector<GeneratingResult> family;
  std::vector<DegreeCheck> degrees;
};

PackageReport check_morse_package(const Skeleton& s, const MorseData& md, int max_degree);

// ---------------------------------------------------------------- two-dimensional reduction

/// Values of f restricted to the affine plane xi_k + h', as polynomials in
/// coordinates of h (one variable per basis vector of h). Indexed by
/// component vertex.
std::vector<MultiPoly> restrict_sharp(const Component& comp, const Subspace& h, const std::vector<MultiPoly>& values,
                                      const Vec& xi_k);

struct InducedClass {
  std::vector<MultiPoly> values;  // over h coordinates, per component vertex
  int degree = 0;
  Rational c = 1;
  Vec xi_k;
  bool is_class = false;
  bool leading_ok = false;
  bool support_ok = false;
  bool ok() const { return is_class && leading_ok && support_ok; }
};

/// Builds the degree-s part of c^{-1} tau^# for the generating class at the
/// parent vertex p (which must lie in comp) and checks it is a generating
/// class of the component.
InducedClass induced_generating_class(const Skeleton& s, const MorseData& md, const CohomologyClass& tau, int p,
                                      const Subspace& h, const Component& comp, std::uint64_t seed = 1);

/// A component re-expressed over h with a suitable xi and its Morse data.
struct SliceComponent {
  Component comp;
  Skeleton local;  // over the coordinates of h
  Vec xi;          // in local coordinates
  bool xi_reused = true;
  MorseData morse;
  std::vector<GeneratingResult> family;
  bool passes = false;
};

struct SliceReport {
  Subspace h;
  std::vector<SliceComponent> components;
  bool skipped_irregular = false;
};

struct ReductionReport {
  std::vector<SliceReport> slices;
  bool slices_pass = true;
  bool full_pass = false;
  bool consistent = false;
  std::vector<std::string> warnings;
};

SliceComponent analyze_slice_component(const Component& comp, const Subspace& h, const Vec& xi, std::uint64_t seed);
ReductionReport two_dim_reduction_check(const Skeleton& s, const MorseData& md, std::uint64_t seed = 1);

}  // namespace gkm
