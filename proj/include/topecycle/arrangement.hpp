#pragma once

#include <set>
#include <vector>

#include "topecycle/linalg.hpp"

namespace topecycle {

// One central hyperplane { x : <normal, x> = 0 }.  Normals are kept in
// canonical form: common rational content cleared, first nonzero entry
// positive.  Orientation relative to a base region is handled separately by
// the tope machinery, never by mutating the normal.
struct Hyperplane {
  Vec normal;
};

// Central hyperplane arrangement: an ordered, duplicate-free list of
// hyperplanes over one scalar field.  Immutable after construction.
class Arrangement {
public:
  // Throws DuplicateHyperplane / FieldMismatch / InvalidInput.
  Arrangement(int dim, long long field_d, std::vector<Vec> normals);

  int dim() const { return dim_; }
  long long field_d() const { return field_d_; }
  int size() const { return int(hyps_.size()); }
  const Hyperplane& hyperplane(int i) const { return hyps_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyps_; }

  int rank() const { return rank_; }

  // Index of the hyperplane whose canonical normal is proportional to v,
  // or -1 when absent.
  int find(const Vec& v) const;

  // Sort hyperplanes lexicographically by canonical normal (the order used
  // by all generators).  Returns the sorted copy.
  Arrangement canonically_sorted() const;

  // Set equality of canonical normals (order-insensitive).
  bool same_hyperplanes(const Arrangement& o) const;

private:
  int dim_;
  long long field_d_;
  std::vector<Hyperplane> hyps_;
  int rank_ = 0;
};

struct Deletion {
  Arrangement sub;
  std::vector<int> old_to_new; // -1 for dropped hyperplanes
  std::vector<int> new_to_old;
};

// Remove the listed hyperplanes; remaining indices are compacted in the
// original order.  Throws DropAll when nothing would remain.
Deletion delete_hyperplanes(const Arrangement& a, const std::set<int>& drop);

// The arrangement { H' cap H_h : H' != H_h } in coordinates of H_h (an exact
// basis of the hyperplane); proportional induced normals are merged.
Arrangement restrict_to(const Arrangement& a, int h);

// Product arrangement in dimension dim(a) + dim(b); hyperplanes of a first,
// each normal zero-padded into its block.
Arrangement product(const Arrangement& a, const Arrangement& b);

// Coordinates for the essential quotient: the row basis B of span(normals).
// Mapping each normal v to B v gives an essential arrangement with the same
// topes in dimension rank(a); hyperplane order and indices are unchanged.
struct Essentialization {
  Mat basis;            // rank x dim
  std::vector<Vec> normals; // essential coordinates, index-aligned with a
  int rank;
};
Essentialization essentialize(const Arrangement& a);

} // namespace topecycle
