#pragma once

// Closed-form det, dist and 2-distinguishing cost of PX(n,k).

#include <optional>

#include "pxg/px_graph.hpp"

namespace pxg {

/// Empty when the parameter is undefined.
using ParamValue = std::optional<int>;

int ceil_div(int a, int b);

/// All three throw UsageError outside the standing assumption.
ParamValue det_formula(const PxParams& p);
ParamValue dist_formula(const PxParams& p);
/// Undefined for k = 1, where no 2-coloring is distinguishing.
ParamValue cost_formula(const PxParams& p);

}  // namespace pxg
