#pragma once

// Twins (distinct vertices with equal open neighborhoods), the twin quotient
// graph, and the transfer of distinguishing colorings from the quotient.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pxg/graph.hpp"
#include "pxg/px_graph.hpp"
#include "pxg/symmetry.hpp"

namespace pxg {

struct TwinPartition {
  /// Sorted member lists, ordered by smallest member.
  std::vector<std::vector<VertexId>> classes;
  /// Index into `classes` for every vertex.
  std::vector<std::size_t> class_of;

  bool twin_free() const noexcept { return classes.size() == class_of.size(); }
};

TwinPartition twin_classes(const Graph& g);

struct QuotientGraph {
  /// Vertex c of `graph` is class c of the partition.
  Graph graph;
  /// Smallest member of each class.
  std::vector<VertexId> representative;
  std::vector<std::size_t> class_size;
};

/// Throws std::logic_error if some pair of classes is joined by some but not
/// all cross pairs, which cannot happen for a twin partition.
QuotientGraph twin_quotient(const Graph& g, const TwinPartition& twins);
QuotientGraph twin_quotient(const Graph& g);

/// All vertices except the largest id of each class.
std::vector<VertexId> min_twin_cover(const Graph& g);

/// Smallest d with C(d, t) >= quotient_dist.
int dist_from_quotient(int t, int quotient_dist);

/// dist(C_n). Throws UsageError for n < 3.
int cycle_dist(int n);

std::uint64_t binomial(int n, int r) noexcept;

/// Lifts a coloring of the quotient to `colors` colors on the graph: quotient
/// color q becomes the q-th t-subset of {0..colors-1} in colex order, and
/// the members of a class receive the colors of their subset in increasing
/// order. All classes must have the same size t. Colors are renumbered
/// densely in increasing order.
Coloring lift_coloring(const TwinPartition& twins, const Coloring& quotient_coloring, int colors);

/// Edge list of the quotient labelled by representatives ("i:bits i:bits").
void write_quotient_edges(std::ostream& out, const PxGraph& g, const TwinPartition& twins, const QuotientGraph& q);
/// {"n","k","classes":[{"representative","size","members"}],"edges":[[c,c]]}
void write_quotient_json(std::ostream& out, const PxGraph& g, const TwinPartition& twins, const QuotientGraph& q);

}  // namespace pxg
