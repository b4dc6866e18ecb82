#pragma once

#include "topecycle/arrangement.hpp"
#include "topecycle/builder.hpp"
#include "topecycle/certificate.hpp"
#include "topecycle/lattice.hpp"

namespace topecycle {

struct SplitIndices {
  std::vector<int> a0, a1;
};

// One fiber of the projection onto the A0 subarrangement: the members form
// a path whose steps use each A1 hyperplane exactly once; the endpoints
// eps_plus / eps_minus carry all-positive / all-negative A1 signs relative
// to the base orientation.
struct Fiber {
  Tope base_tope;           // restriction of the members to the A0 positions
  std::vector<int> members; // tope ids of g in path order, eps_plus first
  int eps_plus() const { return members.front(); }
  int eps_minus() const { return members.back(); }
};

// Partition the topes of g into fibers over the A0-restriction.  base fixes
// the orientation (its signs count as "+").  Throws NotAPath when some
// fiber is not a path using each A1 type exactly once.
std::vector<Fiber> fibers(const TopeGraph& g, const SplitIndices& split, const Tope& base);

// Boustrophedon product cycle: sweep c2 forward and backward once per stop
// of c1.  Certificates are verified against their graphs first; flip
// indices of the second factor are shifted behind those of the first.
HamiltonCertificate product_cycle(const TopeGraph& g1, const HamiltonCertificate& c1,
                                  const TopeGraph& g2, const HamiltonCertificate& c2);

// A quadrilateral: cycle edges e1, e2 in two vertex-disjoint cycles and the
// crossing edges f1, f2 closing a 4-cycle.
struct Quadrilateral {
  std::pair<Tope, Tope> e1, e2, f1, f2;
};

// Splice two vertex-disjoint cycles into one: drop e1 and e2, reconnect
// through f1 and f2.  Throws EdgeNotInCycle / InvalidInput.
HamiltonCertificate glue(const HamiltonCertificate& c1, const HamiltonCertificate& c2,
                         const Quadrilateral& q);

// Hamiltonian cycle of a supersolvable arrangement by the fiber recursion:
// the rank-2 base is a plain cycle, and each level traverses the fibers of
// its A0-cycle alternating between the eps_+ and eps_- entry points.
HamiltonCertificate supersolvable_cycle(const Arrangement& a, const BuildOptions& opt = {});

// Oriented-matroid mode: the tope graph is given abstractly together with
// the A1 index sets of a valid split chain (outermost first).
HamiltonCertificate supersolvable_cycle(const TopeGraph& g,
                                        const std::vector<std::vector<int>>& a1_chain);

struct SearchResult {
  enum Status { Found, ProvedNone, BudgetExceeded };
  Status status;
  std::optional<HamiltonCertificate> certificate;
};

// Backtracking Hamiltonian-cycle search with degree pruning, connectivity
// pruning and forced-move propagation; deterministic in the canonical tope
// order.  budget limits the number of search-tree nodes.
SearchResult search_cycle(const TopeGraph& g, long long budget = 50000000);

} // namespace topecycle
