#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topecycle/scalar.hpp"

namespace topecycle {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>; // row-major

Scalar dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const Scalar& c);

// Reduced row echelon form of the row space (pivots 1, zeros above and
// below, rows ordered by pivot column).  Zero rows are dropped, so the
// result is a canonical representation of the row space.
struct Rref {
  Mat rows;
  std::vector<int> pivot_cols;
  int rank() const { return int(rows.size()); }
};
Rref rref(Mat m);

int rank(const Mat& m);

// Canonical string key of the row space; equal iff the spans are equal.
std::string row_space_key(const Mat& m);

// True iff v lies in the row space described by an Rref.
bool in_row_space(const Rref& r, const Vec& v);

// Basis of { x in F^n : m x = 0 }.
Mat nullspace(const Mat& m, int n);

// Solve A x = b for square nonsingular A (rows).  Returns nullopt when A is
// singular.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Solve A X = B column-by-column with a single elimination; B given as a
// list of columns.  Returns nullopt when A is singular.
std::optional<Mat> solve_columns(const Mat& a, const Mat& b_cols);

// Coefficients c with sum_i c_i vectors[i] = target, for linearly
// independent vectors (possibly fewer than the ambient dimension).
// Returns nullopt when target is outside the span.
std::optional<Vec> express_in_span(const Mat& vectors, const Vec& target);

// Divide out the common rational content and make the first nonzero entry
// positive.  The zero vector is returned unchanged.
Vec canonicalize_direction(Vec v);

bool proportional(const Vec& a, const Vec& b);

std::string vec_str(const Vec& v);

} // namespace topecycle
