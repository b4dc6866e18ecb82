#pragma once

#include "topecycle/arrangement.hpp"

namespace topecycle {

// A flat of the intersection lattice: the span of its generating normals,
// keyed canonically by reduced row echelon form.  Generators are maximal:
// every hyperplane containing the subspace is listed.
struct Flat {
  std::vector<int> generators; // sorted hyperplane indices
  int rank;                    // codimension of the subspace
  std::string key;
};

// The full intersection lattice, graded by rank; flats[0] is the bottom
// (the whole space), the last flat of maximal rank is the top.
struct Lattice {
  std::vector<Flat> flats;
  std::vector<std::vector<int>> by_rank;     // flat ids per rank
  std::vector<std::vector<int>> cover_up;    // ids covering each flat
  Mat normals;                               // copy of the arrangement normals
  int rank = 0;

  int bottom() const { return 0; }
  int top() const { return by_rank[rank].front(); }
  int flat_count() const { return int(flats.size()); }
};

Lattice build_lattice(const Arrangement& a, long long max_flats = 1000000);

// Literal rank identity rk(x v w) + rk(x ^ w) = rk(x) + rk(w) against every
// flat w of the lattice.
bool is_modular(const Lattice& l, int flat_id);

// One level of the supersolvable decomposition; indices are relative to the
// arrangement the decomposition was computed for.
struct SplitLevel {
  std::vector<int> a0; // sub-arrangement of rank one less
  std::vector<int> a1; // nonempty remainder, closed over A0
};

// Chain of splits from rank(a) down to rank 2 (empty chain when
// rank(a) <= 2).  At each level, every pair H', H'' in A1 meets inside some
// H in A0; the search enumerates modular coatoms with backtracking,
// preferring larger |A0|, then lexicographic order.
struct SupersolvableDecomposition {
  std::vector<SplitLevel> chain;
};

std::optional<SupersolvableDecomposition> supersolvable_decomposition(const Arrangement& a);

} // namespace topecycle
