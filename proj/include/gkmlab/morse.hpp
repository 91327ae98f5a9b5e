#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkmlab/skeleton.hpp"

namespace gkm {

struct MorseData {
  Vec xi;
  std::vector<bool> up;        // per oriented edge: alpha_e(xi) > 0
  std::vector<Rational> phi;   // injective, xi-compatible
  std::vector<int> sigma;      // index
  std::vector<int> betti;      // b_0..b_d

  int index(int v) const { return sigma[v]; }
};

struct PolarizingCheck {
  bool ok = true;
  int edge = -1;
};
PolarizingCheck is_polarizing(const Skeleton& s, const Vec& xi);

struct GenericCheck {
  bool ok = true;
  int vertex = -1;
  std::array<int, 4> edges{-1, -1, -1, -1};
};
/// Throws PreconditionError if xi is not polarizing.
GenericCheck is_generic(const Skeleton& s, const Vec& xi);

struct Orientation {
  std::vector<bool> up;
  bool acyclic = true;
  std::vector<int> cycle;  // vertex indices of a witness cycle
};
Orientation orient_and_check_acyclic(const Skeleton& s, const Vec& xi);

/// Longest-path Morse function with a rank perturbation for injectivity.
MorseData canonical_morse(const Skeleton& s, const Vec& xi);

/// Morse data for a prescribed phi; throws if phi is not injective or not
/// strictly increasing along the xi-orientation.
MorseData morse_from_function(const Skeleton& s, const Vec& xi, std::vector<Rational> phi);

/// Seeded search over integer vectors in [-B, B]^n, B doubling every
/// round. `signs` (if nonempty) fixes the sign of each coordinate.
Vec find_xi(const Skeleton& s, int attempts, std::uint64_t seed, const std::vector<int>& signs = {});

std::vector<int> flow_up(const Skeleton& s, const MorseData& md, int p);
std::vector<int> flow_down(const Skeleton& s, const MorseData& md, int p);

bool poincare_check(const MorseData& md);

/// Vertex indices ordered by increasing phi.
std::vector<int> phi_order(const MorseData& md);

}  // namespace gkm
