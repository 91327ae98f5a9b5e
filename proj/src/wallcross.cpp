#include "gkmlab/wallcross.hpp"

#include <algorithm>

#include "gkmlab/error.hpp"
#include "gkmlab/linalg.hpp"
#include "gkmlab/symfun.hpp"

namespace gkm {

namespace {

std::vector<Rational> distinct_levels(const MorseData& md) {
  std::vector<Rational> v = md.phi;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

WallData wall_data(const Skeleton& s, const MorseData& md, int p) {
  if (p < 0 || p >= s.num_vertices()) throw InputError("wall_data: no such vertex");
  WallData wd;
  wd.vertex = p;
  auto levels = distinct_levels(md);
  auto it = std::find(levels.begin(), levels.end(), md.phi[p]);
  std::size_t k = it - levels.begin();
  wd.c = k == 0 ? Rational(levels[0] - 1) : Rational((levels[k - 1] + levels[k]) / 2);
  wd.c_prime = k + 1 == levels.size() ? Rational(levels[k] + 1) : Rational((levels[k] + levels[k + 1]) / 2);

  PolarizedBasis pb(md.xi);
  for (int e : s.out(p)) {
    const auto& alpha = s.edge(e).alpha;
    if (md.up[e]) {
      wd.delta_c_prime.push_back(e);
      wd.m_c_prime.push_back(pb.m(alpha));
      wd.beta_c_prime.push_back(pb.beta(alpha));
    } else {
      wd.delta_c.push_back(e);
      wd.m_c.push_back(pb.m(alpha));
      wd.beta_c.push_back(pb.beta(alpha));
    }
  }
  wd.r = static_cast<int>(wd.delta_c.size());
  wd.s = static_cast<int>(wd.delta_c_prime.size());
  wd.extremal = wd.r == 0 || wd.s == 0;
  for (const auto& bi : wd.beta_c) {
    std::vector<Vec> row;
    for (const auto& ba : wd.beta_c_prime) {
      row.push_back(sub(bi, ba));
      if (is_zero(row.back())) wd.generic = false;
    }
    wd.tau_sharp.push_back(std::move(row));
  }
  return wd;
}

std::vector<int> delta_positions(const WallData& wd, const Skeleton& s, const CrossSection& cs_c) {
  std::vector<int> out;
  for (int e : wd.delta_c) {
    int pos = cs_c.position(s.edge(e).rev);
    if (pos < 0) throw ContextMismatch("cross-section is not at the lower level of this wall");
    out.push_back(pos);
  }
  return out;
}

std::vector<int> delta_prime_positions(const WallData& wd, const CrossSection& cs_c_prime) {
  std::vector<int> out;
  for (int e : wd.delta_c_prime) {
    int pos = cs_c_prime.position(e);
    if (pos < 0) throw ContextMismatch("cross-section is not at the upper level of this wall");
    out.push_back(pos);
  }
  return out;
}

FiniteCoh restrict_delta(const WallData& wd, const Skeleton& s, const CrossSection& cs_c, const std::vector<MultiPoly>& f) {
  if (wd.r == 0) throw PreconditionError("restrict_delta: Delta_c is empty at an index-0 vertex");
  std::vector<MultiPoly> g;
  for (int pos : delta_positions(wd, s, cs_c)) g.push_back(f.at(pos));
  return finite_coh_decompose(wd.beta_c, g);
}

bool restrict_delta_check(const WallData& wd, const Skeleton& s, const CrossSection& cs_c, const std::vector<MultiPoly>& f) {
  return wd.r == 0 || restrict_delta(wd, s, cs_c, f).member;
}

namespace {

struct Side {
  std::vector<int> positions;  // of the solved-for block in its cross-section
  std::vector<Vec> beta;
};

/// Solves, for each point b of the `solve` block, the Vandermonde system
///   sum_k X^k u_k(b) = given(a) + sum_j X^j g_j(a)
/// over every point a of the `known` block, with X = beta_lower - beta_upper.
std::vector<std::vector<RationalFn>> solve_block(int ny, const Side& known, const Side& solve, bool lower_is_known,
                                                 const std::vector<MultiPoly>& known_values,
                                                 const std::vector<std::vector<MultiPoly>>& known_corr) {
  std::size_t nk = known.beta.size();
  std::vector<std::vector<RationalFn>> out(nk, std::vector<RationalFn>(solve.beta.size(), RationalFn(ny)));
  for (std::size_t b = 0; b < solve.beta.size(); ++b) {
    std::vector<MultiPoly> nodes;
    std::vector<MultiPoly> rhs;
    for (std::size_t a = 0; a < nk; ++a) {
      Vec diff = lower_is_known ? sub(known.beta[a], solve.beta[b]) : sub(solve.beta[b], known.beta[a]);
      MultiPoly X = MultiPoly::linear(diff);
      MultiPoly value = known_values[a];
      MultiPoly power = X;
      for (const auto& corr : known_corr) {
        value += power * corr[a];
        power *= X;
      }
      nodes.push_back(std::move(X));
      rhs.push_back(std::move(value));
    }
    auto inv = vandermonde_inverse_symbolic(nodes);
    for (std::size_t k = 0; k < nk; ++k) {
      RationalFn u(ny);
      for (std::size_t a = 0; a < nk; ++a) u += inv[k][a] * RationalFn(rhs[a]);
      out[k][b] = std::move(u);
    }
  }
  return out;
}

WallTransform finish(const Skeleton& s, const SliceAtlas& atlas, const CrossSection& target, const CrossSection& source,
                     const std::vector<MultiPoly>& source_f, const Side& target_side,
                     std::vector<std::vector<RationalFn>> solved) {
  WallTransform out;
  int ny = target.ydim();
  out.f.assign(target.members.size(), MultiPoly(ny));
  std::vector<bool> in_block(target.members.size(), false);
  for (int pos : target_side.positions) in_block[pos] = true;
  for (std::size_t pos = 0; pos < target.members.size(); ++pos) {
    if (in_block[pos]) continue;
    int src = source.position(target.members[pos]);
    if (src < 0) throw InconsistencyError("cross-sections on both sides of a wall disagree away from the wall");
    out.f[pos] = source_f[src];
  }
  auto take = [&](const RationalFn& fn) {
    auto p = fn.as_polynomial();
    if (!p) {
      out.polynomial = false;
      return MultiPoly(ny);
    }
    return *p;
  };
  for (std::size_t b = 0; b < target_side.positions.size(); ++b) out.f[target_side.positions[b]] = take(solved[0][b]);
  for (std::size_t k = 1; k < solved.size(); ++k) {
    std::vector<MultiPoly> corr;
    for (const auto& fn : solved[k]) corr.push_back(take(fn));
    out.corrections.push_back(std::move(corr));
  }
  if (!out.polynomial) return out;
  out.member = membership_Hc(s, target, atlas, out.f).member;
  out.corrections_member = true;
  for (const auto& corr : out.corrections)
    if (!finite_coh_decompose(target_side.beta, corr).member) out.corrections_member = false;
  return out;
}

/// Both sides of the wall equation at every (e_i, e_a).
bool equation_holds(const WallData& wd, const std::vector<MultiPoly>& lower_f,
                    const std::vector<std::vector<MultiPoly>>& lower_corr, const std::vector<MultiPoly>& upper_f,
                    const std::vector<std::vector<MultiPoly>>& upper_corr) {
  for (int i = 0; i < wd.r; ++i)
    for (int a = 0; a < wd.s; ++a) {
      MultiPoly X = MultiPoly::linear(wd.tau_sharp[i][a]);
      MultiPoly left = upper_f[a], right = lower_f[i];
      MultiPoly power = X;
      for (const auto& c : upper_corr) {
        left += power * c[a];
        power *= X;
      }
      power = X;
      for (const auto& c : lower_corr) {
        right += power * c[i];
        power *= X;
      }
      if (!(left == right)) return false;
    }
  return true;
}

void check_walls(const WallData& wd) {
  if (wd.extremal) throw PreconditionError("wall transform needs 1 <= r <= d-1");
  if (!wd.generic) throw PreconditionError("tau_sharp vanishes: xi is not generic at this wall");
}

std::vector<MultiPoly> pick(const std::vector<MultiPoly>& values, const std::vector<int>& positions) {
  std::vector<MultiPoly> out;
  for (int pos : positions) out.push_back(values.at(pos));
  return out;
}

}  // namespace

WallTransform cross_transform(const Skeleton& s, const SliceAtlas& atlas, const WallData& wd, const CrossSection& cs_c,
                              const CrossSection& cs_c_prime, const std::vector<MultiPoly>& f,
                              const std::vector<std::vector<MultiPoly>>& fi) {
  check_walls(wd);
  if (static_cast<int>(fi.size()) != wd.s - 1) throw ContextMismatch("cross_transform: expected s-1 corrections");
  Side lower{delta_positions(wd, s, cs_c), wd.beta_c};
  Side upper{delta_prime_positions(wd, cs_c_prime), wd.beta_c_prime};
  auto lower_f = pick(f, lower.positions);
  auto solved = solve_block(cs_c.ydim(), lower, upper, true, lower_f, fi);
  auto out = finish(s, atlas, cs_c_prime, cs_c, f, upper, std::move(solved));
  if (out.polynomial) out.resubstituted = equation_holds(wd, lower_f, fi, pick(out.f, upper.positions), out.corrections);
  return out;
}

WallTransform reverse_transform(const Skeleton& s, const SliceAtlas& atlas, const WallData& wd,
                                const CrossSection& cs_c, const CrossSection& cs_c_prime,
                                const std::vector<MultiPoly>& f_prime,
                                const std::vector<std::vector<MultiPoly>>& fj_prime) {
  check_walls(wd);
  if (static_cast<int>(fj_prime.size()) != wd.r - 1) throw ContextMismatch("reverse_transform: expected r-1 corrections");
  Side lower{delta_positions(wd, s, cs_c), wd.beta_c};
  Side upper{delta_prime_positions(wd, cs_c_prime), wd.beta_c_prime};
  auto upper_f = pick(f_prime, upper.positions);
  auto solved = solve_block(cs_c.ydim(), upper, lower, false, upper_f, fj_prime);
  auto out = finish(s, atlas, cs_c, cs_c_prime, f_prime, lower, std::move(solved));
  if (out.polynomial)
    out.resubstituted = equation_holds(wd, pick(out.f, lower.positions), out.corrections, upper_f, fj_prime);
  return out;
}

std::int64_t dim_delta(int r, int s, int m, int ny) {
  std::int64_t total = 0;
  for (int k = 0; k < s; ++k) total += static_cast<std::int64_t>(graded_dim(m - k, ny));
  for (int k = 0; k < r; ++k) total -= static_cast<std::int64_t>(graded_dim(m - k, ny));
  return total;
}

bool bracket_identity(const std::vector<int>& betti) {
  int d = static_cast<int>(betti.size()) - 1;
  for (int k = 0; k <= d; ++k) {
    int total = 0;
    for (int l = 0; l <= d - k; ++l) total += betti[l];
    for (int l = k + 1; l <= d; ++l) total -= betti[l];
    if (total != betti[k]) return false;
  }
  return true;
}

bool SweepStep::ok() const {
  return level_dim < 0 || (level_dim == running && kirwan_rank == running);
}

SweepContext sweep_context(const Skeleton& s, const MorseData& md, std::uint64_t seed) {
  SweepContext ctx{cut_product(s, md), {}};
  ctx.atlas = build_atlas(ctx.ps.product, ctx.ps.morse, seed);
  return ctx;
}

SweepReport dim_by_sweep(const Skeleton& s, const MorseData& md, int m, bool check_levels, std::uint64_t seed) {
  return dim_by_sweep(sweep_context(s, md, seed), m, check_levels);
}

SweepReport dim_by_sweep(const SweepContext& ctx, int m, bool check_levels) {
  const auto& ps = ctx.ps;
  const Skeleton& flat = ps.product;
  int n = ps.base.dim();
  int d = ps.base.valence();
  auto order = phi_order(ps.morse);
  const auto& Phi = ps.morse.phi;

  SweepReport rep;
  rep.m = m;
  std::vector<CohomologyClass> basis;
  if (check_levels) basis = basis_H(flat, m);
  auto measure = [&](const Rational& c, int& level_dim, int& rank) {
    auto cs = cross_section(flat, ps.morse, ctx.atlas, c);
    if (!cs.valence_count_ok) throw InconsistencyError("valence count fails at level " + to_display(c));
    level_dim = level_dimension(flat, cs, ctx.atlas, m);
    rank = kirwan_rank(flat, cs, basis, m);
  };

  rep.start_level = (Phi[order[0]] + Phi[order[1]]) / 2;
  for (int k = 0; k <= d; ++k) rep.start_dim += static_cast<std::int64_t>(graded_dim(m - k, n));
  if (check_levels) measure(rep.start_level, rep.start_level_dim, rep.start_kirwan_rank);

  std::int64_t running = rep.start_dim;
  int nbase = ps.base.num_vertices();
  for (int k = 1; k < nbase; ++k) {
    int v = order[k];
    SweepStep step;
    auto it = std::find(ps.level0.begin(), ps.level0.end(), v);
    if (it == ps.level0.end()) throw InconsistencyError("sweep reached a level-1 vertex before the window");
    step.vertex = static_cast<int>(it - ps.level0.begin());
    step.r = ps.morse.sigma[v];
    step.s = d + 1 - step.r;
    step.level = (Phi[v] + Phi[order[k + 1]]) / 2;
    step.delta = dim_delta(step.r, step.s, m, n);
    running += step.delta;
    step.running = running;
    if (check_levels) measure(step.level, step.level_dim, step.kirwan_rank);
    rep.steps.push_back(step);
  }
  rep.final_dim = running;
  rep.dim_h = dim_H(ps.base, m);
  rep.formula = betti_formula(ps.base_morse.betti, m, n);
  rep.bracket_ok = bracket_identity(ps.base_morse.betti);

  bool window_ok = true;
  if (check_levels) {
    Rational c1 = nbase > 1 ? rep.steps.back().level : rep.start_level;
    auto cs = cross_section(flat, ps.morse, ctx.atlas, c1);
    MonomialIndex idx(n, m);
    std::vector<SparseRow> rows;
    for (const auto& cls : basis) {
      auto f = rho_star(ps, cs, kirwan(flat, cs, cls.values));
      if (class_violation(ps.base, f)) window_ok = false;
      rows.push_back(to_sparse(idx.flatten(f)));
    }
    rep.window_dim = rank_of(std::move(rows), idx.size() * nbase);
    window_ok = window_ok && rep.window_dim == rep.dim_h;
  }

  bool steps_ok = std::all_of(rep.steps.begin(), rep.steps.end(), [](const SweepStep& st) { return st.ok(); });
  bool start_ok = rep.start_level_dim < 0 ||
                  (rep.start_level_dim == rep.start_dim && rep.start_kirwan_rank == rep.start_dim);
  rep.ok = steps_ok && start_ok && window_ok && rep.bracket_ok && rep.final_dim == rep.dim_h &&
           static_cast<std::uint64_t>(rep.dim_h) == rep.formula;
  return rep;
}

}  // namespace gkm
