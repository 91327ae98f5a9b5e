#pragma once

#include <optional>
#include <vector>

#include "gkmlab/crosssection.hpp"

namespace gkm {

/// Gamma x L with the lifted Morse function Phi(p, t) = phi(p) + a t.
struct ProductSkeleton {
  Skeleton base;
  MorseData base_morse;
  Skeleton product;  // over g* + R, the new coordinate last
  Rational a;
  MorseData morse;   // xi_flat = (xi, 1), phi = Phi
  AxiomReport axioms;
  bool acyclic = false;
  bool index_ok = false;  // sigma(p,0) = sigma_p, sigma(p,1) = sigma_p + 1
  bool betti_ok = false;  // b_k(product) = b_k + b_{k-1}
  std::vector<int> level0;    // base vertex -> (p, 0)
  std::vector<int> level1;    // base vertex -> (p, 1)
  std::vector<int> vertical;  // base vertex -> edge (p, 0) -> (p, 1)

  Rational window_low() const;   // phi_max
  Rational window_high() const;  // phi_min + a
  /// Midpoint of the window: a level whose cross-section is V.
  Rational window_level() const;
};

/// a defaults to phi_max - phi_min + 1. Throws PreconditionError if a is too small.
ProductSkeleton cut_product(const Skeleton& s, const MorseData& md, std::optional<Rational> a = std::nullopt);

/// g on the cross-section of the product at a window level (member order)
/// to a map V -> S(g*). Throws PreconditionError outside the window.
std::vector<MultiPoly> rho_star(const ProductSkeleton& ps, const CrossSection& cs, const std::vector<MultiPoly>& g);

/// Inverse of rho_star.
std::vector<MultiPoly> rho_inverse(const ProductSkeleton& ps, const CrossSection& cs, const std::vector<MultiPoly>& f);

}  // namespace gkm
