#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkmlab/polyring.hpp"

namespace gkm {

struct Edge {
  int src = 0;
  int dst = 0;
  int rev = -1;  // index of the reversed edge
  Vec alpha;
};

struct UnorientedEdge {
  std::string src;
  std::string dst;
  Vec alpha;  // weight of src -> dst
};

/// A finite graph with oriented-edge involution and axial function.
/// Vertices are kept in sorted id order; every downstream tie-break uses it.
class Skeleton {
 public:
  Skeleton() = default;

  /// One entry per unoriented edge; the reversal with weight -alpha is added.
  static Skeleton from_unoriented(SpaceCtx ctx, std::vector<std::string> vertices,
                                  const std::vector<UnorientedEdge>& edges);
  /// Raw oriented edges with `rev` filled in. Involution structure is checked,
  /// the weight identity of the reversal is not (validate_axioms reports it).
  static Skeleton from_oriented(SpaceCtx ctx, std::vector<std::string> vertices, std::vector<Edge> edges);

  const SpaceCtx& ctx() const { return ctx_; }
  int dim() const { return ctx_.dim(); }
  int num_vertices() const { return static_cast<int>(ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  std::optional<int> find(const std::string& id) const;
  int index_of(const std::string& id) const;  // throws InputError

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<int>& out(int v) const { return out_[v]; }

  /// Common valence, or -1 when vertices differ in valence.
  int valence() const;
  bool is_regular() const { return valence() >= 0; }
  /// One representative (the lower index) per unoriented edge.
  std::vector<int> unoriented() const;

 private:
  void finish();

  SpaceCtx ctx_;
  std::vector<std::string> ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
};

/// A linear subspace of g*, stored as the reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(const std::vector<Vec>& spanning);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  bool operator==(const Subspace& o) const = default;
  bool operator<(const Subspace& o) const;

 private:
  std::vector<Vec> basis_;
};

struct Connection {
  // theta[e][i] = index into out(dst) matched with out(src)[i]; c[e][i] the constant.
  std::vector<std::vector<int>> theta;
  std::vector<std::vector<Rational>> c;
};

struct AxiomReport {
  bool a1 = true;
  bool a2 = true;
  bool a3 = true;
  std::string a1_witness;
  std::string a2_witness;
  std::string a3_witness;
  std::optional<Connection> connection;

  bool ok() const { return a1 && a2 && a3; }
};

/// Throws InputError on a structurally malformed graph (irregular valence).
AxiomReport validate_axioms(const Skeleton& s);

/// A connected piece of a subgraph, with vertex ids mapped back to the parent.
struct Component {
  Skeleton graph;
  std::vector<int> parent_vertex;  // component vertex -> parent vertex
  std::vector<int> parent_edge;    // component edge -> parent edge
  int valence = 0;                 // -1 if irregular
};

std::vector<Component> connected_components(const Skeleton& s);

/// Components of the subgraph of edges with alpha in h. Vertices without
/// such edges are dropped.
std::vector<Component> subskeleton(const Skeleton& s, const Subspace& h);

std::vector<Subspace> enumerate_2d_subspaces(const Skeleton& s);

/// Coordinates of v in the given basis (v must lie in its span).
Vec coordinates_in(const std::vector<Vec>& basis, const Vec& v);

/// The component re-expressed over the coordinates of h (dim h variables).
Skeleton reexpress(const Skeleton& s, const Subspace& h, const std::vector<std::string>& labels);

}  // namespace gkm
