#pragma once

#include "topecycle/arrangement.hpp"
#include "topecycle/tope.hpp"

namespace topecycle {

// Brute-force tope enumeration by incremental hyperplane insertion with
// exact feasibility checks; independent of the wall-crossing machinery and
// valid for any central arrangement, simplicial or not.  Edges are the
// Hamming-1 pairs whose common boundary is a genuine wall (dimension
// rank-1), decided by exact feasibility inside the separating hyperplane.
TopeGraph oracle_enumerate(const Arrangement& a, long long max_topes = 1000000);

} // namespace topecycle
