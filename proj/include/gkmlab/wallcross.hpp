#pragma once

#include <cstdint>
#include <vector>

#include "gkmlab/cutting.hpp"

namespace gkm {

/// The single vertex p between the levels c < phi(p) < c'.
struct WallData {
  int vertex = -1;
  int r = 0;
  int s = 0;
  bool extremal = false;  // r = 0 or r = d
  Rational c;
  Rational c_prime;
  std::vector<int> delta_c;        // edges out of p pointing down (e_1..e_r)
  std::vector<int> delta_c_prime;  // edges out of p pointing up
  std::vector<Rational> m_c, m_c_prime;
  std::vector<Vec> beta_c, beta_c_prime;        // y-coordinates
  std::vector<std::vector<Vec>> tau_sharp;      // [i][a] = beta_i - beta_a
  bool generic = true;                          // every tau_sharp nonzero
};

/// Levels are midpoints between consecutive phi values (one unit beyond the
/// extremes).
WallData wall_data(const Skeleton& s, const MorseData& md, int p);

/// Positions of Delta_c in the level-c cross-section (reversed edges), and of
/// Delta_c' at c'.
std::vector<int> delta_positions(const WallData& wd, const Skeleton& s, const CrossSection& cs_c);
std::vector<int> delta_prime_positions(const WallData& wd, const CrossSection& cs_c_prime);

/// Decomposes f restricted to Delta_c over tau_c.
FiniteCoh restrict_delta(const WallData& wd, const Skeleton& s, const CrossSection& cs_c, const std::vector<MultiPoly>& f);
bool restrict_delta_check(const WallData& wd, const Skeleton& s, const CrossSection& cs_c, const std::vector<MultiPoly>& f);

struct WallTransform {
  std::vector<MultiPoly> f;                        // on the target level (member order)
  std::vector<std::vector<MultiPoly>> corrections; // on the target Delta, one vector per power
  bool polynomial = true;   // every solved value lies in S(g*_xi)
  bool resubstituted = true;
  bool member = false;      // f passes membership at the target level
  bool corrections_member = false;
};

/// f on V_c, f_i on Delta_c (i = 1..s-1) -> f' on V_c', f'_j on Delta_c'
/// (j = 1..r-1). Requires 1 <= r <= d-1.
WallTransform cross_transform(const Skeleton& s, const SliceAtlas& atlas, const WallData& wd, const CrossSection& cs_c,
                              const CrossSection& cs_c_prime, const std::vector<MultiPoly>& f,
                              const std::vector<std::vector<MultiPoly>>& fi);

/// The inverse wall: f' and f'_j back to f and f_i.
WallTransform reverse_transform(const Skeleton& s, const SliceAtlas& atlas, const WallData& wd,
                                const CrossSection& cs_c, const CrossSection& cs_c_prime,
                                const std::vector<MultiPoly>& f_prime,
                                const std::vector<std::vector<MultiPoly>>& fj_prime);

/// sum_{k<s} lambda_{m-k, ny} - sum_{k<r} lambda_{m-k, ny}, ny = dim g*_xi.
std::int64_t dim_delta(int r, int s, int m, int ny);

/// sum_{l<=d-k} b_l - sum_{l>k} b_l = b_k for every k.
bool bracket_identity(const std::vector<int>& betti);

struct SweepStep {
  int vertex = -1;  // base vertex p of the wall (p, 0)
  int r = 0;
  int s = 0;
  Rational level;   // level after the wall
  std::int64_t delta = 0;
  std::int64_t running = 0;
  int level_dim = -1;    // from the hyperedge conditions
  int kirwan_rank = -1;  // rank of the Kirwan image of a basis
  bool ok() const;
};

struct SweepReport {
  int m = 0;
  Rational start_level;
  std::int64_t start_dim = 0;
  int start_level_dim = -1;
  int start_kirwan_rank = -1;
  std::vector<SweepStep> steps;
  std::int64_t final_dim = 0;
  int dim_h = 0;
  std::uint64_t formula = 0;
  int window_dim = -1;  // dim of rho_* of the window level space
  bool bracket_ok = false;
  bool ok = false;
};

/// Sweeps the product cross-sections from below its minimum up to the window.
/// check_levels also computes the level dimensions directly at every step.
SweepReport dim_by_sweep(const Skeleton& s, const MorseData& md, int m, bool check_levels = true,
                         std::uint64_t seed = 1);

/// Shared setup for repeated sweeps over one graph.
struct SweepContext {
  ProductSkeleton ps;
  SliceAtlas atlas;
};
SweepContext sweep_context(const Skeleton& s, const MorseData& md, std::uint64_t seed = 1);
SweepReport dim_by_sweep(const SweepContext& ctx, int m, bool check_levels = true);

}  // namespace gkm
