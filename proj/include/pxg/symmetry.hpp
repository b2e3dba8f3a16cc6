#pragma once

// Definition-level checkers and brute-force oracles for determining sets,
// distinguishing colorings and 2-distinguishing cost. Nothing here knows the
// structure of PX graphs: every routine takes the group explicitly, either as
// permutation tables or as any range of elements plus an action functor.

#include <chrono>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <vector>

#include "pxg/graph.hpp"

namespace pxg {

struct SearchBudget {
  int max_subset_size = 8;
  std::uint64_t max_checks = 1'000'000'000;
  std::uint64_t node_limit = 50'000'000;
  std::chrono::milliseconds time_limit{0};  // zero means no limit
  std::size_t generic_vertex_cap = 120;
  int max_colors = 8;
};

enum class SearchStatus { complete, budget_exhausted };

/// Total map V -> {0, ..., num_colors - 1}.
struct Coloring {
  std::vector<std::uint32_t> color;
  std::uint32_t num_colors = 0;

  /// Color 0 on `red`, color 1 elsewhere.
  static Coloring from_red_set(std::size_t order, std::span<const VertexId> red);
  std::vector<std::vector<VertexId>> classes() const;
};

template <std::ranges::input_range Group, class Act, class IsIdentity>
bool is_determining_in(Group&& group, std::span<const VertexId> set, Act&& act, IsIdentity&& is_identity) {
  for (auto&& g : group) {
    bool fixes = true;
    for (VertexId s : set) {
      if (act(g, s) != s) {
        fixes = false;
        break;
      }
    }
    if (fixes && !is_identity(g)) return false;
  }
  return true;
}

/// True iff no non-identity element maps `red` onto itself.
template <std::ranges::input_range Group, class Act, class IsIdentity>
bool is_distinguishing_red_set_in(Group&& group, std::span<const VertexId> red, std::size_t order, Act&& act,
                                  IsIdentity&& is_identity) {
  std::vector<char> in_red(order, 0);
  for (VertexId v : red) in_red.at(v) = 1;
  for (auto&& g : group) {
    bool preserves = true;
    for (VertexId v : red) {
      if (!in_red[act(g, v)]) {
        preserves = false;
        break;
      }
    }
    if (preserves && !is_identity(g)) return false;
  }
  return true;
}

template <std::ranges::input_range Group, class Act, class IsIdentity>
bool is_distinguishing_in(Group&& group, const Coloring& coloring, Act&& act, IsIdentity&& is_identity) {
  const auto order = static_cast<VertexId>(coloring.color.size());
  for (auto&& g : group) {
    bool preserves = true;
    for (VertexId v = 0; v < order; ++v) {
      if (coloring.color[act(g, v)] != coloring.color[v]) {
        preserves = false;
        break;
      }
    }
    if (preserves && !is_identity(g)) return false;
  }
  return true;
}

/// Only the identity of `group` fixes every vertex of `set`.
bool is_determining(std::span<const Perm> group, std::span<const VertexId> set);
/// Only the identity of `group` maps every color class onto itself.
bool is_distinguishing(std::span<const Perm> group, const Coloring& coloring);
bool is_distinguishing_red_set(std::span<const Perm> group, std::span<const VertexId> red);

struct SubsetSearch {
  std::optional<int> value;
  std::vector<VertexId> witness;
  SearchStatus status = SearchStatus::complete;
  std::uint64_t checks = 0;
};

/// Minimum determining set; sizes ascending, subsets lexicographic, so the
/// witness is the lexicographically least minimum determining set.
SubsetSearch det_bruteforce(std::span<const Perm> group, const SearchBudget& budget = {});

/// Minimum red-class size of a distinguishing 2-coloring (red sets of size at
/// most |V|/2, ascending, lexicographic). value is empty with status complete
/// when no 2-coloring is distinguishing.
SubsetSearch cost2_bruteforce(std::span<const Perm> group, const SearchBudget& budget = {});

struct DistSearch {
  std::optional<int> value;
  Coloring witness;
  SearchStatus status = SearchStatus::complete;
  std::uint64_t checks = 0;
};

/// Minimum number of colors of a distinguishing coloring.
DistSearch dist_bruteforce(std::span<const Perm> group, const SearchBudget& budget = {});

struct AutomorphismSearch {
  PermGroup group;  // sorted
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Full automorphism group by individualization and equitable refinement,
/// verifying every leaf mapping against the edge set.
AutomorphismSearch generic_automorphisms(const Graph& g, const SearchBudget& budget = {});

/// Some element swapping u and v, if any. Throws UsageError when u == v.
std::optional<Perm> interchangeable_bruteforce(std::span<const Perm> group, VertexId u, VertexId v);

}  // namespace pxg
