#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pxg/bitword.hpp"
#include "pxg/graph.hpp"

namespace pxg {

/// Parameters of PX(n,k); valid when n >= 3 and 1 <= k < n.
struct PxParams {
  int n = 0;
  int k = 0;

  /// Throws UsageError outside the standing assumption, CapacityError when
  /// n * 2^k exceeds kMaxPxOrder.
  void validate() const;

  friend bool operator==(const PxParams&, const PxParams&) = default;
  friend auto operator<=>(const PxParams&, const PxParams&) = default;
};

inline constexpr std::size_t kMaxPxOrder = std::size_t{1} << 24;

/// (i, x): fibre index i in Z_n and a word of length k.
struct Vertex {
  int fibre;
  BitWord word;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// "i:bits", e.g. "2:011".
std::string to_string(const Vertex& v);
/// Parses "i:bits". The fibre index is not reduced; validate against a graph.
Vertex parse_vertex(std::string_view text);

/// True iff n is even and i - j = n/2 (mod n).
bool antipodal(int i, int j, int n);

int mod(long long a, int n) noexcept;

/// PX(n,k) with precomputed sorted adjacency.
///
/// Vertex (i, x) has id i * 2^k + numeral(x). (i,x) ~ (i+1,y) iff the last
/// k-1 bits of x equal the first k-1 bits of y.
class PxGraph {
 public:
  explicit PxGraph(PxParams params);

  const PxParams& params() const noexcept { return params_; }
  int n() const noexcept { return params_.n; }
  int k() const noexcept { return params_.k; }
  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }

  bool contains(const Vertex& v) const noexcept;
  VertexId id(const Vertex& v) const;
  Vertex vertex(VertexId id) const;
  std::vector<VertexId> ids(const std::vector<Vertex>& vs) const;
  std::vector<Vertex> vertices(const std::vector<VertexId>& ids) const;

  /// Up-neighbors (i+1, x_1..x_{k-1}b) followed by down-neighbors (i-1, a x_0..x_{k-2}), b,a = 0,1.
  std::array<Vertex, 4> neighbors(const Vertex& v) const;
  std::vector<Vertex> fibre(int i) const;

 private:
  PxParams params_;
  Graph graph_;
};

enum class ExportFormat { dot, edges, json };

ExportFormat parse_export_format(std::string_view name);

/// edges: one "i:bits j:bits" line per edge, endpoints and lines in id order.
void write_edges(std::ostream& out, const PxGraph& g);
/// DOT with a circular layout: fibre 0 at 12 o'clock, fibres clockwise,
/// numeral 0 innermost.
void write_dot(std::ostream& out, const PxGraph& g);
/// {"n":..,"k":..,"vertices":["i:bits",..],"edges":[[id,id],..]}
void write_json(std::ostream& out, const PxGraph& g);
void export_graph(std::ostream& out, const PxGraph& g, ExportFormat format);

}  // namespace pxg
