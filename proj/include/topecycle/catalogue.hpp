#pragma once

#include "topecycle/arrangement.hpp"
#include "topecycle/tope.hpp"

namespace topecycle {

enum class Family { A, B, D, Dns, I2m, R0, R1, R2 };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

// A(n): braid A_{n-1} in R^n, n >= 2.  B(n): hyperoctahedral, n >= 2.
// D(n): n >= 4.  Dns(n, s): D_n plus the first s coordinate hyperplanes,
// n >= 2, 0 <= s <= n.  I2m(m): m lines through the origin in the plane.
// R0(m): near-pencil with m planes, m >= 3.  R1(m): coned sidelines and
// mirror axes of a regular m-gon, 2m planes.  R2(m): R1(2m) plus the
// line-at-infinity H_{e3}, 4m+1 planes.
struct FamilySpec {
  Family family;
  int n = 0;
  int s = 0;
  int m = 0;
};

// Exact generator; hyperplanes in canonical lexicographic order.  Throws
// InvalidInput for parameters outside the family's range and
// UnsupportedField when the geometry needs more than one square root
// (supported: I2m m in {3,4,5,6,8,12}; R1 m in {3,...,6,8,10,12}; R2 m in
// {2,...,6}).
Arrangement generate(const FamilySpec& spec);

struct SignedPermutation {
  std::vector<int> sigma; // one-line notation, values 1..n
  std::vector<int> delta; // +1/-1 per element: delta[k-1] is the sign of x_k

  int n() const { return int(sigma.size()); }
  bool valid() const;
};

// Tope of the B_n region containing the witness point with
// |x_{sigma(1)}| > ... > |x_{sigma(n)}| > 0 and sign(x_k) = delta(k),
// in the hyperplane order of bn (which must be generate({B, n})).
Tope tope_of_signed_perm(const SignedPermutation& sp, const Arrangement& bn);
Tope tope_of_signed_perm(const SignedPermutation& sp, int n);

// Canonical normal of the separating hyperplane when the two signed
// permutations are adjacent regions of B_n: either sigma = sigma', delta
// differs exactly at k = sigma(n) (type H_{e_k}), or delta = delta' and the
// sigmas differ by one adjacent transposition (type H_{e_i -+ e_j}).
std::optional<Vec> signed_perm_adjacent(const SignedPermutation& a, const SignedPermutation& b);

} // namespace topecycle
