#include "pxg/twins.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "pxg/errors.hpp"

namespace pxg {

TwinPartition twin_classes(const Graph& g) {
  TwinPartition out;
  out.class_of.assign(g.order(), 0);
  std::map<std::vector<VertexId>, std::size_t> by_neighborhood;
  for (VertexId v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    std::vector<VertexId> key(nb.begin(), nb.end());
    auto [it, inserted] = by_neighborhood.try_emplace(std::move(key), out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(v);
    out.class_of[v] = it->second;
  }
  return out;
}

QuotientGraph twin_quotient(const Graph& g, const TwinPartition& twins) {
  const std::size_t m = twins.classes.size();
  QuotientGraph q;
  for (const auto& c : twins.classes) {
    q.representative.push_back(c.front());
    q.class_size.push_back(c.size());
  }
  std::map<Edge, std::size_t> crossings;
  for (const auto& [u, v] : g.edges()) {
    auto a = static_cast<VertexId>(twins.class_of[u]);
    auto b = static_cast<VertexId>(twins.class_of[v]);
    if (a == b) throw std::logic_error("twins cannot be adjacent to each other");
    ++crossings[std::minmax(a, b)];
  }
  std::vector<Edge> edges;
  for (const auto& [e, count] : crossings) {
    if (count != q.class_size[e.first] * q.class_size[e.second]) {
      throw std::logic_error("classes joined by some but not all cross pairs");
    }
    edges.push_back(e);
  }
  q.graph = Graph(m, edges);
  return q;
}

QuotientGraph twin_quotient(const Graph& g) { return twin_quotient(g, twin_classes(g)); }

std::vector<VertexId> min_twin_cover(const Graph& g) {
  std::vector<VertexId> out;
  for (const auto& c : twin_classes(g).classes) out.insert(out.end(), c.begin(), c.end() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t binomial(int n, int r) noexcept {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t value = 1;
  for (int i = 1; i <= r; ++i) {
    if (value > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n - r + i)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    value = value * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return value;
}

int dist_from_quotient(int t, int quotient_dist) {
  if (t < 1 || quotient_dist < 1) throw UsageError("class size and quotient dist must be positive");
  int d = t;
  while (binomial(d, t) < static_cast<std::uint64_t>(quotient_dist)) ++d;
  return d;
}

int cycle_dist(int n) {
  if (n < 3) throw UsageError("cycles need at least 3 vertices");
  return n <= 5 ? 3 : 2;
}

namespace {

// The q-th t-subset of the naturals in colex order.
std::vector<std::uint32_t> colex_subset(std::uint64_t q, int t) {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(t));
  for (int i = t; i >= 1; --i) {
    int c = i - 1;
    while (binomial(c + 1, i) <= q) ++c;
    out[static_cast<std::size_t>(i - 1)] = static_cast<std::uint32_t>(c);
    q -= binomial(c, i);
  }
  return out;
}

}  // namespace

Coloring lift_coloring(const TwinPartition& twins, const Coloring& quotient_coloring, int colors) {
  if (quotient_coloring.color.size() != twins.classes.size()) {
    throw UsageError("quotient coloring does not match the partition");
  }
  const int t = static_cast<int>(twins.classes.front().size());
  for (const auto& c : twins.classes) {
    if (static_cast<int>(c.size()) != t) throw UsageError("lifting needs equal class sizes");
  }
  if (binomial(colors, t) < quotient_coloring.num_colors) throw UsageError("too few colors to lift");
  std::vector<std::uint32_t> raw(twins.class_of.size());
  for (std::size_t c = 0; c < twins.classes.size(); ++c) {
    auto subset = colex_subset(quotient_coloring.color[c], t);
    for (std::size_t i = 0; i < subset.size(); ++i) raw[twins.classes[c][i]] = subset[i];
  }
  std::vector<std::uint32_t> used(raw.begin(), raw.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  Coloring out{std::vector<std::uint32_t>(raw.size()), static_cast<std::uint32_t>(used.size())};
  for (std::size_t v = 0; v < raw.size(); ++v) {
    out.color[v] = static_cast<std::uint32_t>(std::lower_bound(used.begin(), used.end(), raw[v]) - used.begin());
  }
  return out;
}

void write_quotient_edges(std::ostream& out, const PxGraph& g, const TwinPartition&, const QuotientGraph& q) {
  for (const auto& [a, b] : q.graph.edges()) {
    out << to_string(g.vertex(q.representative[a])) << ' ' << to_string(g.vertex(q.representative[b])) << '\n';
  }
}

void write_quotient_json(std::ostream& out, const PxGraph& g, const TwinPartition& twins, const QuotientGraph& q) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  doc["k"] = g.k();
  auto classes = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < twins.classes.size(); ++c) {
    nlohmann::ordered_json entry;
    entry["representative"] = to_string(g.vertex(q.representative[c]));
    entry["size"] = q.class_size[c];
    auto members = nlohmann::ordered_json::array();
    for (VertexId v : twins.classes[c]) members.push_back(to_string(g.vertex(v)));
    entry["members"] = std::move(members);
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : q.graph.edges()) edges.push_back({a, b});
  doc["edges"] = std::move(edges);
  out << doc.dump() << '\n';
}

}  // namespace pxg
