#include "gkmlab/morse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "gkmlab/error.hpp"

namespace gkm {

PolarizingCheck is_polarizing(const Skeleton& s, const Vec& xi) {
  if (static_cast<int>(xi.size()) != s.dim()) throw ContextMismatch("xi has the wrong dimension");
  for (int e : s.unoriented())
    if (sgn(dot(s.edge(e).alpha, xi)) == 0) return {false, e};
  return {};
}

GenericCheck is_generic(const Skeleton& s, const Vec& xi) {
  if (!is_polarizing(s, xi).ok) throw PreconditionError("xi is not polarizing");
  for (int v = 0; v < s.num_vertices(); ++v) {
    const auto& o = s.out(v);
    std::vector<Vec> normed;
    for (int e : o) normed.push_back(scaled(s.edge(e).alpha, 1 / dot(s.edge(e).alpha, xi)));
    std::map<Vec, std::pair<int, int>, VecLess> seen;
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = 0; j < o.size(); ++j) {
        if (i == j) continue;
        auto [it, inserted] = seen.try_emplace(sub(normed[i], normed[j]), static_cast<int>(i), static_cast<int>(j));
        if (!inserted) {
          GenericCheck g;
          g.ok = false;
          g.vertex = v;
          g.edges = {o[it->second.first], o[it->second.second], o[i], o[j]};
          return g;
        }
      }
  }
  return {};
}

Orientation orient_and_check_acyclic(const Skeleton& s, const Vec& xi) {
  auto pol = is_polarizing(s, xi);
  if (!pol.ok) throw PreconditionError("xi is not polarizing (edge " + s.id(s.edge(pol.edge).src) + "-" +
                                       s.id(s.edge(pol.edge).dst) + ")");
  Orientation o;
  o.up.resize(s.num_edges());
  for (int e = 0; e < s.num_edges(); ++e) o.up[e] = sgn(dot(s.edge(e).alpha, xi)) > 0;
  // colour DFS, iterative
  int nv = s.num_vertices();
  std::vector<int> colour(nv, 0), parent(nv, -1);
  for (int root = 0; root < nv && o.acyclic; ++root) {
    if (colour[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty() && o.acyclic) {
      auto& [v, k] = stack.back();
      const auto& out = s.out(v);
      if (k == out.size()) {
        colour[v] = 2;
        stack.pop_back();
        continue;
      }
      int e = out[k++];
      if (!o.up[e]) continue;
      int w = s.edge(e).dst;
      if (colour[w] == 1) {
        o.acyclic = false;
        for (int x = v; x != w; x = parent[x]) o.cycle.push_back(x);
        o.cycle.push_back(w);
        std::reverse(o.cycle.begin(), o.cycle.end());
      } else if (colour[w] == 0) {
        colour[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return o;
}

namespace {

void fill_indices(const Skeleton& s, MorseData& md) {
  md.sigma.assign(s.num_vertices(), 0);
  for (int v = 0; v < s.num_vertices(); ++v)
    for (int e : s.out(v))
      if (!md.up[e]) ++md.sigma[v];
  int d = std::max(s.valence(), 0);
  md.betti.assign(d + 1, 0);
  for (int v = 0; v < s.num_vertices(); ++v) ++md.betti.at(md.sigma[v]);
}

}  // namespace

MorseData canonical_morse(const Skeleton& s, const Vec& xi) {
  auto o = orient_and_check_acyclic(s, xi);
  if (!o.acyclic) throw PreconditionError("the xi-orientation has an oriented cycle");
  int nv = s.num_vertices();
  // Kahn topological order, then longest path into each vertex.
  std::vector<int> indeg(nv, 0);
  for (int e = 0; e < s.num_edges(); ++e)
    if (o.up[e]) ++indeg[s.edge(e).dst];
  std::vector<int> queue;
  for (int v = 0; v < nv; ++v)
    if (!indeg[v]) queue.push_back(v);
  std::vector<int> phi0(nv, 0);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int v = queue[k];
    for (int e : s.out(v)) {
      if (!o.up[e]) continue;
      int w = s.edge(e).dst;
      phi0[w] = std::max(phi0[w], phi0[v] + 1);
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  MorseData md;
  md.xi = xi;
  md.up = std::move(o.up);
  md.phi.resize(nv);
  for (int v = 0; v < nv; ++v) md.phi[v] = Rational(phi0[v]) + Rational(v) / (nv + 1);
  fill_indices(s, md);
  return md;
}

MorseData morse_from_function(const Skeleton& s, const Vec& xi, std::vector<Rational> phi) {
  if (static_cast<int>(phi.size()) != s.num_vertices()) throw ContextMismatch("phi has the wrong length");
  auto o = orient_and_check_acyclic(s, xi);
  std::vector<Rational> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("phi is not injective");
  for (int e = 0; e < s.num_edges(); ++e)
    if (o.up[e] && !(phi[s.edge(e).src] < phi[s.edge(e).dst]))
      throw PreconditionError("phi does not increase along " + s.id(s.edge(e).src) + "->" + s.id(s.edge(e).dst));
  MorseData md;
  md.xi = xi;
  md.up = std::move(o.up);
  md.phi = std::move(phi);
  fill_indices(s, md);
  return md;
}

Vec find_xi(const Skeleton& s, int attempts, std::uint64_t seed, const std::vector<int>& signs) {
  std::mt19937_64 rng(seed);
  int n = s.dim();
  long bound = 2;
  int per_round = 16;
  int fail_pol = 0, fail_gen = 0, fail_acyc = 0;
  for (int t = 0; t < attempts; ++t) {
    if (t > 0 && t % per_round == 0 && bound < (1L << 40)) bound *= 2;
    std::uniform_int_distribution<long> dist(-bound, bound);
    Vec xi(n);
    for (int i = 0; i < n; ++i) {
      long v = dist(rng);
      if (!signs.empty() && signs[i] != 0) v = (v == 0 ? 1 : std::labs(v)) * signs[i];
      xi[i] = v;
    }
    if (!is_polarizing(s, xi).ok) {
      ++fail_pol;
      continue;
    }
    if (!is_generic(s, xi).ok) {
      ++fail_gen;
      continue;
    }
    if (!orient_and_check_acyclic(s, xi).acyclic) {
      ++fail_acyc;
      continue;
    }
    return xi;
  }
  std::string worst = "polarizing";
  if (fail_gen >= fail_pol && fail_gen >= fail_acyc) worst = "generic";
  if (fail_acyc >= fail_pol && fail_acyc >= fail_gen) worst = "acyclic";
  throw PreconditionError("no suitable xi found in " + std::to_string(attempts) + " attempts (most frequent failure: " +
                          worst + ")");
}

namespace {

std::vector<int> reach(const Skeleton& s, const MorseData& md, int p, bool upward) {
  if (p < 0 || p >= s.num_vertices()) throw InputError("unknown vertex index");
  std::vector<bool> seen(s.num_vertices(), false);
  std::vector<int> stack{p};
  seen[p] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : s.out(v)) {
      if (md.up[e] != upward) continue;
      int w = s.edge(e).dst;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < s.num_vertices(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace

std::vector<int> flow_up(const Skeleton& s, const MorseData& md, int p) { return reach(s, md, p, true); }
std::vector<int> flow_down(const Skeleton& s, const MorseData& md, int p) { return reach(s, md, p, false); }

bool poincare_check(const MorseData& md) {
  auto n = md.betti.size();
  for (std::size_t k = 0; k < n; ++k)
    if (md.betti[k] != md.betti[n - 1 - k]) return false;
  return true;
}

std::vector<int> phi_order(const MorseData& md) {
  std::vector<int> order(md.phi.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return md.phi[a] < md.phi[b]; });
  return order;
}

}  // namespace gkm
