#include "pxg/report.hpp"

#include <algorithm>

#include "pxg/formulas.hpp"

namespace pxg {
namespace {

Json value_or_null(const ParamValue& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::budget:
      return "budget";
  }
  return "fail";
}

Json VerificationReport::to_json() const {
  Json out;
  out["claim"] = claim;
  out["method"] = method;
  out["value"] = value;
  out["witness"] = witness;
  out["elapsed_ms"] = elapsed_ms;
  out["status"] = to_string(status);
  return out;
}

std::vector<std::string> vertex_labels(const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_string(v));
  return out;
}

std::vector<std::string> vertex_labels(const PxGraph& g, const std::vector<VertexId>& ids) {
  return vertex_labels(g.vertices(ids));
}

Json params_json(const PxParams& p) {
  Json out;
  out["n"] = p.n;
  out["k"] = p.k;
  out["det"] = value_or_null(det_formula(p));
  out["dist"] = value_or_null(dist_formula(p));
  out["cost"] = value_or_null(cost_formula(p));
  return out;
}

Json witness_json(std::string_view kind, const PxParams& p, const std::vector<Vertex>& vertices,
                  std::optional<bool> verified) {
  Json out;
  out["kind"] = kind;
  out["n"] = p.n;
  out["k"] = p.k;
  out["vertices"] = vertex_labels(vertices);
  out["verified"] = verified ? Json(*verified) : Json(nullptr);
  return out;
}

Json coloring_json(const PxGraph& g, const Coloring& coloring, std::optional<bool> verified) {
  auto classes = coloring.classes();
  std::vector<VertexId> smallest = *std::min_element(
      classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  Json out = witness_json("dist", g.params(), g.vertices(smallest), verified);
  Json all = Json::array();
  for (const auto& c : classes) all.push_back(vertex_labels(g, c));
  out["colors"] = std::move(all);
  return out;
}

Json summary_json(const std::vector<VerificationReport>& reports) {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t budget = 0;
  for (const auto& r : reports) {
    if (r.status == Status::pass) ++pass;
    if (r.status == Status::fail) ++fail;
    if (r.status == Status::budget) ++budget;
  }
  Json inner;
  inner["total"] = reports.size();
  inner["pass"] = pass;
  inner["fail"] = fail;
  inner["budget"] = budget;
  Json out;
  out["summary"] = std::move(inner);
  return out;
}

}  // namespace pxg
