#pragma once

#include <optional>

#include "topecycle/linalg.hpp"

namespace topecycle {

// Exact strict feasibility of an open polyhedral cone: find x with
// <a_i, x> >= 1 for every row a_i (equivalently <a_i, x> > 0, by scaling),
// or decide that no such x exists.  Solved by exact simplex pivoting with
// Bland's rule on: maximize t subject to Ax >= t*1, t <= 1; the optimum is
// exactly 0 (infeasible) or 1 (witness found).
std::optional<Vec> strict_feasible(const Mat& constraints, int n);

} // namespace topecycle
