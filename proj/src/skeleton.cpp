#include "gkmlab/skeleton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "gkmlab/error.hpp"
#include "gkmlab/linalg.hpp"

namespace gkm {

namespace {

std::vector<int> sort_ids(std::vector<std::string>& ids) {
  std::vector<int> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ids[a] < ids[b]; });
  std::vector<std::string> sorted;
  std::vector<int> new_index(ids.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = static_cast<int>(k);
    sorted.push_back(ids[order[k]]);
  }
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (sorted[k] == sorted[k - 1]) throw InputError("duplicate vertex id '" + sorted[k] + "'");
  ids = std::move(sorted);
  return new_index;
}

}  // namespace

Skeleton Skeleton::from_unoriented(SpaceCtx ctx, std::vector<std::string> vertices,
                                   const std::vector<UnorientedEdge>& edges) {
  Skeleton s;
  s.ctx_ = std::move(ctx);
  sort_ids(vertices);
  s.ids_ = std::move(vertices);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& ue = edges[k];
    auto a = s.find(ue.src);
    auto b = s.find(ue.dst);
    if (!a) throw InputError("edge " + std::to_string(k) + ": unknown vertex '" + ue.src + "'");
    if (!b) throw InputError("edge " + std::to_string(k) + ": unknown vertex '" + ue.dst + "'");
    if (*a == *b) throw InputError("edge " + std::to_string(k) + ": loop at '" + ue.src + "'");
    if (static_cast<int>(ue.alpha.size()) != s.dim())
      throw InputError("edge " + std::to_string(k) + ": alpha has " + std::to_string(ue.alpha.size()) +
                       " coordinates, expected " + std::to_string(s.dim()));
    int e = static_cast<int>(s.edges_.size());
    s.edges_.push_back(Edge{*a, *b, e + 1, ue.alpha});
    s.edges_.push_back(Edge{*b, *a, e, scaled(ue.alpha, -1)});
  }
  s.finish();
  return s;
}

Skeleton Skeleton::from_oriented(SpaceCtx ctx, std::vector<std::string> vertices, std::vector<Edge> edges) {
  Skeleton s;
  s.ctx_ = std::move(ctx);
  auto remap = sort_ids(vertices);
  s.ids_ = std::move(vertices);
  int ne = static_cast<int>(edges.size());
  for (int e = 0; e < ne; ++e) {
    auto& ed = edges[e];
    if (ed.src < 0 || ed.src >= static_cast<int>(remap.size()) || ed.dst < 0 ||
        ed.dst >= static_cast<int>(remap.size()))
      throw InputError("edge " + std::to_string(e) + ": vertex index out of range");
    ed.src = remap[ed.src];
    ed.dst = remap[ed.dst];
    if (static_cast<int>(ed.alpha.size()) != s.dim()) throw InputError("edge " + std::to_string(e) + ": wrong alpha length");
    if (ed.rev < 0 || ed.rev >= ne || ed.rev == e) throw InputError("edge " + std::to_string(e) + ": broken involution");
  }
  for (int e = 0; e < ne; ++e) {
    const auto& r = edges[edges[e].rev];
    if (r.rev != e || r.src != edges[e].dst || r.dst != edges[e].src)
      throw InputError("edge " + std::to_string(e) + ": broken involution");
  }
  s.edges_ = std::move(edges);
  s.finish();
  return s;
}

void Skeleton::finish() {
  out_.assign(ids_.size(), {});
  for (int e = 0; e < num_edges(); ++e) out_[edges_[e].src].push_back(e);
  VecLess less;
  for (auto& lst : out_)
    std::sort(lst.begin(), lst.end(), [&](int a, int b) {
      if (edges_[a].dst != edges_[b].dst) return edges_[a].dst < edges_[b].dst;
      if (less(edges_[a].alpha, edges_[b].alpha)) return true;
      if (less(edges_[b].alpha, edges_[a].alpha)) return false;
      return a < b;
    });
}

std::optional<int> Skeleton::find(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

int Skeleton::index_of(const std::string& id) const {
  auto v = find(id);
  if (!v) throw InputError("unknown vertex '" + id + "'");
  return *v;
}

int Skeleton::valence() const {
  if (out_.empty()) return 0;
  auto d = out_.front().size();
  for (const auto& o : out_)
    if (o.size() != d) return -1;
  return static_cast<int>(d);
}

std::vector<int> Skeleton::unoriented() const {
  std::vector<int> out;
  for (int e = 0; e < num_edges(); ++e)
    if (e < edges_[e].rev) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(const std::vector<Vec>& spanning) {
  if (spanning.empty()) return;
  int n = static_cast<int>(spanning.front().size());
  std::vector<SparseRow> rows;
  for (const auto& v : spanning) {
    if (static_cast<int>(v.size()) != n) throw ContextMismatch("subspace: vectors of different lengths");
    rows.push_back(to_sparse(v));
  }
  Echelon e = rref(std::move(rows), n);
  for (const auto& r : e.rows) basis_.push_back(to_dense(r, n));
}

bool Subspace::contains(const Vec& v) const {
  Vec w = v;
  for (const auto& b : basis_) {
    int p = pivot_index(b);
    if (sgn(w[p]) == 0) continue;
    Rational f = w[p];
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= f * b[i];
  }
  return is_zero(w);
}

bool Subspace::operator<(const Subspace& o) const {
  VecLess less;
  return std::lexicographical_compare(basis_.begin(), basis_.end(), o.basis_.begin(), o.basis_.end(), less);
}

// ---------------------------------------------------------------- axioms

namespace {

bool kuhn(int i, const std::vector<std::vector<bool>>& ok, std::vector<int>& match_right, std::vector<bool>& seen,
          const std::vector<bool>& left_fixed, const std::vector<bool>& right_fixed) {
  int d = static_cast<int>(ok.size());
  for (int j = 0; j < d; ++j) {
    if (!ok[i][j] || seen[j] || right_fixed[j]) continue;
    seen[j] = true;
    if (match_right[j] < 0 || kuhn(match_right[j], ok, match_right, seen, left_fixed, right_fixed)) {
      match_right[j] = i;
      return true;
    }
  }
  return false;
}

bool completes(const std::vector<std::vector<bool>>& ok, const std::vector<bool>& left_fixed,
               const std::vector<bool>& right_fixed) {
  int d = static_cast<int>(ok.size());
  std::vector<int> match_right(d, -1);
  for (int i = 0; i < d; ++i) {
    if (left_fixed[i]) continue;
    std::vector<bool> seen(d, false);
    if (!kuhn(i, ok, match_right, seen, left_fixed, right_fixed)) return false;
  }
  return true;
}

// Lexicographically least perfect matching, or empty.
std::vector<int> least_matching(const std::vector<std::vector<bool>>& ok) {
  int d = static_cast<int>(ok.size());
  std::vector<bool> left_fixed(d, false), right_fixed(d, false);
  std::vector<int> match(d, -1);
  for (int i = 0; i < d; ++i) {
    left_fixed[i] = true;
    bool placed = false;
    for (int j = 0; j < d && !placed; ++j) {
      if (!ok[i][j] || right_fixed[j]) continue;
      right_fixed[j] = true;
      if (completes(ok, left_fixed, right_fixed)) {
        match[i] = j;
        placed = true;
      } else {
        right_fixed[j] = false;
      }
    }
    if (!placed) return {};
  }
  return match;
}

Rational multiple_of(const Vec& diff, const Vec& base) {
  int p = pivot_index(base);
  return diff[p] / base[p];
}

}  // namespace

AxiomReport validate_axioms(const Skeleton& s) {
  AxiomReport rep;
  if (!s.is_regular()) throw InputError("malformed graph: vertices have different valences");
  for (int e = 0; e < s.num_edges(); ++e) {
    const auto& ed = s.edge(e);
    const auto& r = s.edge(ed.rev);
    if (ed.rev == e || r.rev != e || r.src != ed.dst || r.dst != ed.src)
      throw InputError("malformed graph: broken involution at edge " + std::to_string(e));
  }

  for (int e = 0; e < s.num_edges() && rep.a2; ++e) {
    const auto& ed = s.edge(e);
    if (s.edge(ed.rev).alpha != scaled(ed.alpha, -1)) {
      rep.a2 = false;
      rep.a2_witness = s.id(ed.src) + "->" + s.id(ed.dst);
    }
  }

  for (int v = 0; v < s.num_vertices() && rep.a1; ++v) {
    const auto& o = s.out(v);
    for (std::size_t i = 0; i < o.size() && rep.a1; ++i)
      for (std::size_t j = i + 1; j < o.size() && rep.a1; ++j)
        if (parallel(s.edge(o[i]).alpha, s.edge(o[j]).alpha)) {
          rep.a1 = false;
          rep.a1_witness = "at " + s.id(v) + ": " + s.id(s.edge(o[i]).dst) + " and " + s.id(s.edge(o[j]).dst);
        }
  }

  Connection conn;
  conn.theta.resize(s.num_edges());
  conn.c.resize(s.num_edges());
  for (int e = 0; e < s.num_edges(); ++e) {
    const auto& ed = s.edge(e);
    const auto& src_out = s.out(ed.src);
    const auto& dst_out = s.out(ed.dst);
    int d = static_cast<int>(src_out.size());
    std::vector<std::vector<bool>> ok(d, std::vector<bool>(d, false));
    bool zero = is_zero(ed.alpha);
    for (int i = 0; i < d && !zero; ++i)
      for (int j = 0; j < d; ++j) {
        bool self = src_out[i] == e;
        bool target_rev = dst_out[j] == ed.rev;
        if (self != target_rev) continue;
        ok[i][j] = parallel(sub(s.edge(dst_out[j]).alpha, s.edge(src_out[i]).alpha), ed.alpha);
      }
    auto match = zero ? std::vector<int>{} : least_matching(ok);
    if (match.empty() && d > 0) {
      rep.a3 = false;
      if (rep.a3_witness.empty()) rep.a3_witness = "no connection along " + s.id(ed.src) + "->" + s.id(ed.dst);
      continue;
    }
    conn.theta[e] = match;
    for (int i = 0; i < d; ++i)
      conn.c[e].push_back(multiple_of(sub(s.edge(dst_out[match[i]]).alpha, s.edge(src_out[i]).alpha), ed.alpha));
  }
  if (rep.a3) {
    for (int e = 0; e < s.num_edges(); ++e) {
      const auto& ed = s.edge(e);
      const auto& src_out = s.out(ed.src);
      const auto& dst_out = s.out(ed.dst);
      for (std::size_t i = 0; i < src_out.size(); ++i) {
        Vec rhs = add(s.edge(src_out[i]).alpha, scaled(ed.alpha, conn.c[e][i]));
        if (s.edge(dst_out[conn.theta[e][i]]).alpha != rhs)
          throw InconsistencyError("connection identity fails along " + s.id(ed.src) + "->" + s.id(ed.dst));
      }
    }
    rep.connection = std::move(conn);
  }
  return rep;
}

// ---------------------------------------------------------------- components

namespace {

std::vector<Component> components_of(const Skeleton& s, const std::vector<bool>& keep_edge) {
  int nv = s.num_vertices();
  std::vector<bool> touched(nv, false);
  for (int e = 0; e < s.num_edges(); ++e)
    if (keep_edge[e]) touched[s.edge(e).src] = touched[s.edge(e).dst] = true;
  bool all_edges = std::all_of(keep_edge.begin(), keep_edge.end(), [](bool b) { return b; });
  std::vector<int> comp(nv, -1);
  std::vector<Component> out;
  for (int start = 0; start < nv; ++start) {
    if (comp[start] >= 0 || (!touched[start] && !all_edges)) continue;
    int cid = static_cast<int>(out.size());
    std::vector<int> members;
    std::queue<int> q;
    q.push(start);
    comp[start] = cid;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      members.push_back(v);
      for (int e : s.out(v)) {
        if (!keep_edge[e]) continue;
        int w = s.edge(e).dst;
        if (comp[w] < 0) {
          comp[w] = cid;
          q.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<int> local(nv, -1);
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < members.size(); ++k) {
      local[members[k]] = static_cast<int>(k);
      ids.push_back(s.id(members[k]));
    }
    std::vector<int> edge_local(s.num_edges(), -1);
    std::vector<int> parent_edge;
    for (int v : members)
      for (int e : s.out(v))
        if (keep_edge[e]) {
          edge_local[e] = static_cast<int>(parent_edge.size());
          parent_edge.push_back(e);
        }
    std::vector<Edge> edges;
    for (int e : parent_edge) {
      const auto& ed = s.edge(e);
      edges.push_back(Edge{local[ed.src], local[ed.dst], edge_local[ed.rev], ed.alpha});
    }
    Component c;
    c.graph = Skeleton::from_oriented(s.ctx(), ids, std::move(edges));
    c.parent_vertex = members;  // ids sorted identically, so the order is preserved
    c.parent_edge = std::move(parent_edge);
    c.valence = c.graph.valence();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Component> connected_components(const Skeleton& s) {
  return components_of(s, std::vector<bool>(s.num_edges(), true));
}

std::vector<Component> subskeleton(const Skeleton& s, const Subspace& h) {
  std::vector<bool> keep(s.num_edges());
  for (int e = 0; e < s.num_edges(); ++e) keep[e] = h.contains(s.edge(e).alpha);
  bool all = std::all_of(keep.begin(), keep.end(), [](bool b) { return b; });
  if (all) return connected_components(s);
  for (int e = 0; e < s.num_edges(); ++e) keep[e] = keep[e] && keep[s.edge(e).rev];
  auto comps = components_of(s, keep);
  std::erase_if(comps, [](const Component& c) { return c.graph.num_edges() == 0; });
  return comps;
}

std::vector<Subspace> enumerate_2d_subspaces(const Skeleton& s) {
  std::set<Subspace> found;
  for (int v = 0; v < s.num_vertices(); ++v) {
    const auto& o = s.out(v);
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j) {
        Subspace h({s.edge(o[i]).alpha, s.edge(o[j]).alpha});
        if (h.dim() == 2) found.insert(h);
      }
  }
  return {found.begin(), found.end()};
}

Vec coordinates_in(const std::vector<Vec>& basis, const Vec& v) {
  int k = static_cast<int>(basis.size());
  int n = static_cast<int>(v.size());
  std::vector<SparseRow> rows(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      if (sgn(basis[j][i]) != 0) rows[i].emplace_back(j, basis[j][i]);
  auto x = solve(std::move(rows), v, k);
  if (!x) throw PreconditionError("vector " + to_string(v) + " is not in the span");
  return *x;
}

Skeleton reexpress(const Skeleton& s, const Subspace& h, const std::vector<std::string>& labels) {
  std::vector<Edge> edges = s.edges();
  for (auto& e : edges) e.alpha = coordinates_in(h.basis(), e.alpha);
  return Skeleton::from_oriented(SpaceCtx(labels), s.ids(), std::move(edges));
}

}  // namespace gkm
