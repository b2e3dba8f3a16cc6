#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pxg {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph on vertices 0..order()-1.
/// Neighbor lists are sorted by vertex id.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges are merged; self-loops and
  /// out-of-range endpoints throw UsageError.
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// All edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

bool is_connected(const Graph& g);

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
/// Q_d on bit vectors 0..2^d-1, adjacent iff they differ in one bit.
Graph hypercube_graph(int d);

/// A permutation of {0,...,n-1} stored as its image array (a "PermTable").
struct Perm {
  std::vector<VertexId> image;

  std::size_t degree() const noexcept { return image.size(); }
  VertexId operator()(VertexId v) const { return image[v]; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

using PermGroup = std::vector<Perm>;

Perm identity_perm(std::size_t n);
/// (a * b)(v) = a(b(v)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p) noexcept;
bool is_bijection(const Perm& p);
/// Swaps u and v and fixes everything else.
Perm transposition(std::size_t n, VertexId u, VertexId v);

/// True iff p is a bijection of V(g) with {u,v} in E iff {p(u),p(v)} in E.
bool is_automorphism(const Graph& g, const Perm& p);

/// True iff the product of any two elements is again an element.
/// Expects `group` sorted.
bool is_closed_under_composition(std::span<const Perm> group);

}  // namespace pxg
