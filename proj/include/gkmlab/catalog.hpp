#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkmlab/skeleton.hpp"

namespace gkm {

struct CatalogGraph {
  std::string name;
  Skeleton skeleton;
  /// Closed-form height (Bruhat length, box count); empty for loaded files.
  std::vector<int> height;
  /// Sign pattern of xi vectors compatible with `height` (empty: no preference).
  std::vector<int> xi_signs;
};

/// Cayley graph of S_n for the transpositions, weights in the simple-root basis.
CatalogGraph cayley_sn(int n);
/// Johnson graph of k-subsets of {1..n}.
CatalogGraph johnson(int n, int k);

/// "sn:N", "johnson:N,K" or "file:PATH".
CatalogGraph open_graph(const std::string& spec);

/// Deterministic polarizing, generic, acyclic xi honoring xi_signs.
Vec suggested_xi(const CatalogGraph& g, std::uint64_t seed = 1);

Skeleton load_skeleton(const std::string& path);
void save_skeleton(const Skeleton& s, const std::string& path);

}  // namespace gkm
