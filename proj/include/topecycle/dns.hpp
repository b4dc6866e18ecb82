#pragma once

#include "topecycle/hamilton.hpp"

namespace topecycle {

struct DnsStats {
  std::string method;            // "supersolvable", "glue" or "search"
  int classes = 0;               // A_{n-2} subgraphs in the partition
  int tree_edges = 0;            // spanning-tree gluings performed
  int min_pair_candidates = -1;  // fewest disjoint quadrilaterals seen on a
                                 // same-delta class pair (type-B), -1 if none
};

// Hamiltonian cycle of T(D_{n,s}).  For n >= 6 this is the quadrilateral
// gluing construction: partition the topes into A_{n-2} subgraphs (the
// sigma(n)-classes, contracted in pairs for coordinates above s), put the
// same Hamiltonian cycle on each, and splice the cycles along a BFS
// spanning tree of the class-incidence graph through pairwise
// edge-disjoint quadrilaterals.  Small n falls back to the supersolvable
// constructor and, failing that, to gluing or plain search.
HamiltonCertificate dns_cycle(int n, int s, const BuildOptions& opt = {},
                              DnsStats* stats = nullptr);

} // namespace topecycle
