#include "pxg/px_graph.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pxg/errors.hpp"

namespace pxg {

void PxParams::validate() const {
  if (n < 3 || k < 1 || k >= n) {
    throw UsageError("PX(n,k) requires n >= 3 and 1 <= k < n, got n=" + std::to_string(n) +
                     " k=" + std::to_string(k));
  }
  if (k > kMaxWordLength || static_cast<std::size_t>(n) > (kMaxPxOrder >> k)) {
    throw CapacityError("PX(" + std::to_string(n) + "," + std::to_string(k) +
                        ") exceeds the vertex limit");
  }
}

int mod(long long a, int n) noexcept {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::string to_string(const Vertex& v) { return std::to_string(v.fibre) + ":" + v.word.to_string(); }

Vertex parse_vertex(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw UsageError("vertex literal must look like i:bits, got '" + std::string(text) + "'");
  }
  int fibre = 0;
  for (char c : text.substr(0, colon)) {
    if (c < '0' || c > '9') throw UsageError("bad fibre index in '" + std::string(text) + "'");
    fibre = fibre * 10 + (c - '0');
    if (fibre > 1'000'000) throw UsageError("fibre index too large");
  }
  return Vertex{fibre, BitWord::parse(text.substr(colon + 1))};
}

bool antipodal(int i, int j, int n) { return n % 2 == 0 && mod(static_cast<long long>(i) - j, n) == n / 2; }

PxGraph::PxGraph(PxParams params) : params_(params) {
  params_.validate();
  const int n = params_.n;
  const int k = params_.k;
  const std::uint32_t words = std::uint32_t{1} << k;
  const std::uint32_t low = words - 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * words * 2);
  for (int i = 0; i < n; ++i) {
    const VertexId base = static_cast<VertexId>(i) * words;
    const VertexId next = static_cast<VertexId>(mod(i + 1, n)) * words;
    for (std::uint32_t x = 0; x < words; ++x) {
      // Drop x_0, shift, append b.
      const std::uint32_t shifted = (x << 1) & low;
      edges.emplace_back(base + x, next + shifted);
      edges.emplace_back(base + x, next + (shifted | 1u));
    }
  }
  graph_ = Graph(static_cast<std::size_t>(n) * words, edges);
}

bool PxGraph::contains(const Vertex& v) const noexcept {
  return v.fibre >= 0 && v.fibre < params_.n && v.word.length() == params_.k;
}

VertexId PxGraph::id(const Vertex& v) const {
  if (!contains(v)) {
    throw UsageError("vertex " + to_string(v) + " is not in PX(" + std::to_string(params_.n) + "," +
                     std::to_string(params_.k) + ")");
  }
  return (static_cast<VertexId>(v.fibre) << params_.k) | v.word.numeral();
}

Vertex PxGraph::vertex(VertexId id) const {
  if (id >= order()) throw UsageError("vertex id " + std::to_string(id) + " out of range");
  return Vertex{static_cast<int>(id >> params_.k), BitWord(params_.k, id & ((1u << params_.k) - 1))};
}

std::vector<VertexId> PxGraph::ids(const std::vector<Vertex>& vs) const {
  std::vector<VertexId> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(id(v));
  return out;
}

std::vector<Vertex> PxGraph::vertices(const std::vector<VertexId>& ids) const {
  std::vector<Vertex> out;
  out.reserve(ids.size());
  for (VertexId v : ids) out.push_back(vertex(v));
  return out;
}

std::array<Vertex, 4> PxGraph::neighbors(const Vertex& v) const {
  id(v);  // validates
  const int k = params_.k;
  const std::uint32_t low = (std::uint32_t{1} << k) - 1;
  const std::uint32_t x = v.word.numeral();
  const std::uint32_t up = (x << 1) & low;
  const std::uint32_t down = x >> 1;
  const std::uint32_t top = std::uint32_t{1} << (k - 1);
  const int next = mod(v.fibre + 1, params_.n);
  const int prev = mod(v.fibre - 1, params_.n);
  return {Vertex{next, BitWord(k, up)}, Vertex{next, BitWord(k, up | 1u)}, Vertex{prev, BitWord(k, down)},
          Vertex{prev, BitWord(k, down | top)}};
}

std::vector<Vertex> PxGraph::fibre(int i) const {
  if (i < 0 || i >= params_.n) throw UsageError("fibre index out of range");
  std::vector<Vertex> out;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << params_.k); ++x) out.push_back(Vertex{i, BitWord(params_.k, x)});
  return out;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "edges") return ExportFormat::edges;
  if (name == "json") return ExportFormat::json;
  throw UsageError("unknown export format '" + std::string(name) + "'");
}

void write_edges(std::ostream& out, const PxGraph& g) {
  for (auto [u, v] : g.graph().edges()) {
    out << to_string(g.vertex(u)) << ' ' << to_string(g.vertex(v)) << '\n';
  }
}

void write_dot(std::ostream& out, const PxGraph& g) {
  const int n = g.n();
  const double words = static_cast<double>(1u << g.k());
  out << "graph \"PX(" << n << "," << g.k() << ")\" {\n";
  out << "  layout=neato;\n  node [shape=point];\n";
  std::ostringstream pos;
  pos << std::fixed << std::setprecision(3);
  for (VertexId v = 0; v < g.order(); ++v) {
    const Vertex vx = g.vertex(v);
    // Clockwise from 12 o'clock.
    const double angle = 2.0 * std::numbers::pi * vx.fibre / n;
    const double radius = 1.0 + vx.word.numeral() / words * 2.0;
    pos.str("");
    pos << radius * std::sin(angle) << "," << radius * std::cos(angle);
    out << "  \"" << to_string(vx) << "\" [pos=\"" << pos.str() << "!\"];\n";
  }
  for (auto [u, v] : g.graph().edges()) {
    out << "  \"" << to_string(g.vertex(u)) << "\" -- \"" << to_string(g.vertex(v)) << "\";\n";
  }
  out << "}\n";
}

void write_json(std::ostream& out, const PxGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  doc["k"] = g.k();
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < g.order(); ++v) vertices.push_back(to_string(g.vertex(v)));
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.graph().edges()) edges.push_back({u, v});
  out << doc.dump() << '\n';
}

void export_graph(std::ostream& out, const PxGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::dot:
      write_dot(out, g);
      break;
    case ExportFormat::edges:
      write_edges(out, g);
      break;
    case ExportFormat::json:
      write_json(out, g);
      break;
  }
  if (!out) throw std::runtime_error("write failed");
}

}  // namespace pxg
