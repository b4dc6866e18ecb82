#pragma once

#include <cstdint>
#include <optional>

#include "topecycle/arrangement.hpp"
#include "topecycle/tope.hpp"

namespace topecycle {

// The positive system of an arrangement: one root per hyperplane (the
// canonical normal), in essential coordinates.  Construction verifies that
// some vector is strictly positive on every root, i.e. the base region is
// nonempty; canonically oriented normals always admit one.
class PositiveSystem {
public:
  explicit PositiveSystem(const Arrangement& a);

  int size() const { return int(roots_.size()); }
  int rank() const { return rank_; }
  const Vec& root(int i) const { return roots_[i]; }
  const Mat& roots() const { return roots_; }
  const Vec& base_witness() const { return witness_; }
  Tope base_tope() const { return Tope(roots_.size(), '+'); }

private:
  Mat roots_; // index-aligned with the arrangement, essential coordinates
  int rank_;
  Vec witness_;
};

// The walk state of one region: its tope, the r wall roots, and the
// expansion of every root of the region's positive system in the wall
// basis.  All expansion entries are >= 0 and exactly the r wall rows are
// unit vectors; that is the simpliciality witness maintained step by step.
struct RegionFrame {
  Tope tope;              // relative to the original positive system
  std::vector<int> walls; // wall slot -> root (hyperplane) index
  Mat table;              // size() x rank entries, row per root

  int rank() const { return int(walls.size()); }
  int size() const { return int(table.size()); }
};

struct ClosestRoot {
  int root;  // row index of the chosen root
  Scalar q;  // quotient entry_i / entry_j
  Scalar d;  // denominator entry_j
};

// Frame of the base region: finds the extreme rays of the cone spanned by
// all roots by optimizing a generic direction and recursing in one
// dimension less, then expands every root in the wall basis.
RegionFrame initial_region(const PositiveSystem& p, std::uint64_t seed = 0);

// Among rows supported exactly on wall slots {i, j}, the one maximizing
// entry_i / entry_j; the separating wall i provides the numerator.  Empty
// when no root is generated by the two walls.
std::optional<ClosestRoot> closest_root(const RegionFrame& f, int i, int j);

// The frame of the neighboring region across wall slot i.
RegionFrame cross_wall(const RegionFrame& f, int i);

struct BuildOptions {
  std::uint64_t seed = 0;
  long long max_topes = 1000000;
};

// Stack-driven exploration of all regions from the base region; the tope
// graph of a simplicial arrangement.  Throws NotSimplicial when the frame
// invariants break, which is exactly the non-simplicial case.
TopeGraph build_tope_graph(const PositiveSystem& p, const BuildOptions& opt = {});
TopeGraph build_tope_graph(const Arrangement& a, const BuildOptions& opt = {});

} // namespace topecycle
