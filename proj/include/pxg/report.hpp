#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pxg/px_graph.hpp"
#include "pxg/symmetry.hpp"

namespace pxg {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, budget };

std::string_view to_string(Status s) noexcept;

struct VerificationReport {
  std::string claim;
  std::string method;  // formula | witness | bruteforce
  Json value;
  std::vector<std::string> witness;
  std::int64_t elapsed_ms = 0;
  Status status = Status::fail;

  Json to_json() const;
};

std::vector<std::string> vertex_labels(const std::vector<Vertex>& vs);
std::vector<std::string> vertex_labels(const PxGraph& g, const std::vector<VertexId>& ids);

/// {"n","k","det","dist","cost"} with null for undefined values.
Json params_json(const PxParams& p);

/// {"kind","n","k","vertices","verified"}; verified is null when unchecked.
Json witness_json(std::string_view kind, const PxParams& p, const std::vector<Vertex>& vertices,
                  std::optional<bool> verified);

/// Witness JSON for a coloring: "vertices" holds the smallest color class and
/// "colors" every class.
Json coloring_json(const PxGraph& g, const Coloring& coloring, std::optional<bool> verified);

/// {"summary":{"total","pass","fail","budget"}}
Json summary_json(const std::vector<VerificationReport>& reports);

}  // namespace pxg
