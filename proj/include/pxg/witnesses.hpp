#pragma once

// Explicit determining sets, distinguishing colorings, cost-achieving red
// sets, and the interchangeability criterion with constructed swaps.

#include <optional>
#include <span>
#include <vector>

#include "pxg/px_graph.hpp"
#include "pxg/px_group.hpp"
#include "pxg/symmetry.hpp"

namespace pxg {

std::vector<Vertex> det_witness(const PxParams& p, const SearchBudget& budget = {});

/// Red class of a 2-distinguishing coloring, of size cost_formula except for
/// n odd with k = (n+1)/2, where the size is 3. Throws NotApplicableError for
/// k = 1.
std::vector<Vertex> cost_witness(const PxParams& p, const SearchBudget& budget = {});

/// The red class of size ceil(n/k) + 1 that works for every n >= 5, k >= 2:
/// {(ik, 0^k)} plus (1, 1^k), or for k = 2 and n even {(0, 11), (ik, 00) :
/// i >= 1} plus (1, 00). Throws UsageError outside n >= 5, k >= 2.
std::vector<Vertex> upper_bound_red_set(const PxParams& p);

/// A distinguishing coloring with dist colors, on the vertex ids of
/// PxGraph(p). For k >= 2 and n >= 5 the red class is upper_bound_red_set.
Coloring dist_witness(const PxParams& p, const SearchBudget& budget = {});

enum class InterchangeClause { same_fibre = 1, reflection = 2, antipodal_rotation = 3 };

/// {i, ..., i+k-1} intersected with {j, ..., j+k-1} in Z_n, sorted.
std::vector<int> interchange_window(const PxParams& p, int i, int j);

/// Clauses of the criterion that hold for u and v, in increasing order.
/// Throws UsageError when u == v or either vertex is not in PX(n,k).
std::vector<InterchangeClause> satisfied_clauses(const PxParams& p, const Vertex& u, const Vertex& v);

/// True iff some element of A swaps u and v.
bool interchangeable_predicate(const PxParams& p, const Vertex& u, const Vertex& v);

/// The criterion specialized to u = (0, 0^k).
bool z_interchangeable(const PxParams& p, const Vertex& v);

/// An element of A swapping u and v built from the requested clause, or by
/// default from the first of same_fibre, antipodal_rotation, reflection that
/// holds. Throws NoWitnessError when the clause (or every clause) fails.
Automorphism interchange_witness(const PxParams& p, const Vertex& u, const Vertex& v,
                                 std::optional<InterchangeClause> clause = std::nullopt);

/// Checkers against Aut(PX(n,k)): streamed over A for n != 4, full tables
/// for n = 4. Vertex ids follow PxGraph(p).
bool verify_determining(const PxParams& p, std::span<const VertexId> set, const SearchBudget& budget = {});
bool verify_distinguishing(const PxParams& p, const Coloring& coloring, const SearchBudget& budget = {});

bool swaps(const PxParams& p, const Automorphism& a, const Vertex& u, const Vertex& v);

}  // namespace pxg
