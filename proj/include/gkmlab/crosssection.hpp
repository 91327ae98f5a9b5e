#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkmlab/cohomology.hpp"

namespace gkm {

/// x with x(xi) = 1 and a basis y_1..y_{n-1} of the annihilator g*_xi.
/// The y_k are the reduced kernel vectors of xi^T, so the y-coordinates of
/// a vector of g*_xi are its entries at the free positions.
class PolarizedBasis {
 public:
  PolarizedBasis() = default;
  explicit PolarizedBasis(const Vec& xi);

  const Vec& xi() const { return xi_; }
  const Vec& x() const { return x_; }
  const std::vector<Vec>& y() const { return y_; }
  int ambient_dim() const { return static_cast<int>(xi_.size()); }
  int ydim() const { return static_cast<int>(free_.size()); }
  std::vector<std::string> labels() const;

  /// y-coordinates of v; throws unless v(xi) = 0.
  Vec to_y(const Vec& v) const;
  /// The element of g*_xi with the given y-coordinates, in g* coordinates.
  Vec from_y(const Vec& coords) const;

  Rational m(const Vec& alpha) const { return dot(alpha, xi_); }
  /// beta with alpha = m (x - beta), in y-coordinates.
  Vec beta(const Vec& alpha) const;
  /// v - (v(xi)/alpha(xi)) alpha, in y-coordinates.
  Vec project(const Vec& v, const Vec& alpha) const;
  /// Ring map S(g*) -> S(g*_xi) sending v to project(v, alpha).
  MultiPoly restrict_along(const MultiPoly& f, const Vec& alpha) const;

 private:
  Vec xi_;
  Vec x_;
  std::vector<Vec> y_;
  std::vector<int> free_;
};

/// Two-dimensional slice components with their generating families,
/// embedded back into S(g*). Computed once per (graph, xi).
struct AtlasComponent {
  SliceComponent slice;
  Subspace h;
  Vec label;  // primitive generator of h cap g*_xi, in g* coordinates
  std::vector<CohomologyClass> family;  // over S(g*), indexed by parent vertex
  std::vector<int> family_vertex;       // parent vertex of each family member
  bool family_ok = false;
};

struct SliceAtlas {
  std::vector<AtlasComponent> components;
  /// Components containing each oriented edge (by atlas index).
  std::vector<std::vector<int>> by_edge;
};

SliceAtlas build_atlas(const Skeleton& s, const MorseData& md, std::uint64_t seed = 1);

struct Hyperedge {
  int atlas_index = -1;
  std::vector<int> members;  // positions in CrossSection::members
  int mu = 0;
  Vec label_g;  // alpha_E in g* coordinates
  Vec label_y;  // alpha_E in y-coordinates
};

struct CrossSection {
  Rational c;
  PolarizedBasis pb;
  std::vector<int> members;  // upward oriented edges crossing the level
  std::vector<Rational> m;   // slope m_e > 0 per member
  std::vector<Vec> beta;     // slope beta_e per member
  std::vector<Hyperedge> hyperedges;
  int singletons = 0;        // components crossing exactly once
  bool valence_count_ok = true;

  int position(int edge) const;  // -1 if not a member
  int ydim() const { return pb.ydim(); }
};

/// Throws PreconditionError when c is a critical value.
CrossSection cross_section(const Skeleton& s, const MorseData& md, const SliceAtlas& atlas, const Rational& c);

/// K_c(f) on every member; both endpoints are checked to agree.
std::vector<MultiPoly> kirwan(const Skeleton& s, const CrossSection& cs, const std::vector<MultiPoly>& values);

RationalFn density(const Skeleton& s, const CrossSection& cs, int pos);
RationalFn integrate_c(const Skeleton& s, const CrossSection& cs, const std::vector<RationalFn>& values);
RationalFn integrate_c(const Skeleton& s, const CrossSection& cs, const std::vector<MultiPoly>& values);

/// Component density: only the component's own edges at i(e) enter the product.
RationalFn component_density(const Skeleton& s, const CrossSection& cs, const SliceAtlas& atlas, const Hyperedge& E,
                             int pos);

struct FiniteCoh {
  bool injective = true;
  bool member = false;
  bool crosscheck_ok = true;
  std::vector<RationalFn> coeffs;  // g_0..g_{|Delta|-1}
};

/// Solves g = sum_k g_k tau^k on Delta (tau given as linear forms over W).
FiniteCoh finite_coh_decompose(const std::vector<Vec>& tau, const std::vector<MultiPoly>& g);

/// dim of the degree-m part of H(Delta, tau), from the spanning set mono * tau^k.
int finite_coh_dimension(const std::vector<Vec>& tau, int m);

struct MembershipReport {
  bool member = true;
  std::vector<bool> per_hyperedge;
};

/// f: V_c -> S(g*_xi) (y-coordinates). Tested hyperedge by hyperedge.
MembershipReport membership_Hc(const Skeleton& s, const CrossSection& cs, const SliceAtlas& atlas,
                               const std::vector<MultiPoly>& values);

/// dim H^m(Gamma_c) from the hyperedge conditions as linear constraints.
int level_dimension(const Skeleton& s, const CrossSection& cs, const SliceAtlas& atlas, int m);

/// Rank of K_c applied to a spanning set of degree-m classes.
int kirwan_rank(const Skeleton& s, const CrossSection& cs, const std::vector<CohomologyClass>& classes, int m);

struct GammaSlice {
  std::vector<int> hyperedges;
  bool totally_disconnected = true;
};
/// gamma in y-coordinates.
GammaSlice gamma_slice(const CrossSection& cs, const Vec& gamma);

}  // namespace gkm
