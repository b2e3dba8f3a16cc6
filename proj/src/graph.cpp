#include "pxg/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pxg/errors.hpp"

namespace pxg {

Graph::Graph(std::size_t order, std::span<const Edge> edges) {
  std::vector<std::vector<VertexId>> adj(order);
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) throw UsageError("edge endpoint out of range");
    if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  offsets_.assign(order + 1, 0);
  for (std::size_t v = 0; v < order; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    offsets_[v + 1] = offsets_[v] + list.size();
  }
  targets_.reserve(offsets_[order]);
  for (const auto& list : adj) targets_.insert(targets_.end(), list.begin(), list.end());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v >= order()) throw UsageError("vertex " + std::to_string(v) + " not in graph");
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::queue<VertexId> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    VertexId u = frontier.front();
    frontier.pop();
    for (VertexId w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == g.order();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw UsageError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < a; ++u) {
    for (std::size_t v = 0; v < b; ++v) edges.emplace_back(u, static_cast<VertexId>(a + v));
  }
  return Graph(a + b, edges);
}

Graph hypercube_graph(int d) {
  if (d < 1 || d > 20) throw UsageError("hypercube dimension out of range");
  const VertexId n = VertexId{1} << d;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (int b = 0; b < d; ++b) {
      VertexId v = u ^ (VertexId{1} << b);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Perm identity_perm(std::size_t n) {
  Perm p;
  p.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.image[i] = static_cast<VertexId>(i);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw UsageError("composing permutations of different degree");
  Perm out;
  out.image.resize(a.degree());
  for (std::size_t v = 0; v < a.degree(); ++v) out.image[v] = a.image[b.image[v]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out;
  out.image.resize(p.degree());
  for (std::size_t v = 0; v < p.degree(); ++v) out.image[p.image[v]] = static_cast<VertexId>(v);
  return out;
}

bool is_identity(const Perm& p) noexcept {
  for (std::size_t v = 0; v < p.degree(); ++v) {
    if (p.image[v] != v) return false;
  }
  return true;
}

bool is_bijection(const Perm& p) {
  std::vector<bool> hit(p.degree(), false);
  for (VertexId w : p.image) {
    if (w >= p.degree() || hit[w]) return false;
    hit[w] = true;
  }
  return true;
}

Perm transposition(std::size_t n, VertexId u, VertexId v) {
  Perm p = identity_perm(n);
  std::swap(p.image.at(u), p.image.at(v));
  return p;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.order() || !is_bijection(p)) return false;
  // A bijection mapping every edge to an edge preserves non-edges too,
  // since the edge count is finite and preserved.
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v && !g.adjacent(p.image[u], p.image[v])) return false;
    }
  }
  return true;
}

bool is_closed_under_composition(std::span<const Perm> group) {
  for (const Perm& a : group) {
    for (const Perm& b : group) {
      if (!std::binary_search(group.begin(), group.end(), compose(a, b))) return false;
    }
  }
  return true;
}

}  // namespace pxg
