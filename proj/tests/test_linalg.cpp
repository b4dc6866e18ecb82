#include "doctest.h"
#include "topecycle/linalg.hpp"
#include "topecycle/lp.hpp"

using namespace topecycle;

namespace {
Vec v(std::initializer_list<long long> xs) {
  Vec r;
  for (auto x : xs) r.push_back(Scalar(x));
  return r;
}
} // namespace

TEST_CASE("rref and rank") {
  Mat m = {v({1, 2, 3}), v({2, 4, 6}), v({1, 0, 1})};
  CHECK(rank(m) == 2);
  Rref r = rref(m);
  CHECK(r.pivot_cols == std::vector<int>{0, 1});
  CHECK(row_space_key(m) == row_space_key(Mat{v({1, 0, 1}), v({0, 1, 1})}));
  CHECK(in_row_space(r, v({3, 2, 5})));
  CHECK(!in_row_space(r, v({0, 0, 1})));
}

TEST_CASE("nullspace and solve") {
  Mat m = {v({1, 1, 1})};
  Mat ns = nullspace(m, 3);
  CHECK(ns.size() == 2);
  for (const auto& b : ns) CHECK(dot(m[0], b).is_zero());

  Mat a = {v({2, 1}), v({1, 3})};
  auto x = solve(a, v({5, 10}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(1));
  CHECK((*x)[1] == Scalar(3));
  CHECK(!solve(Mat{v({1, 2}), v({2, 4})}, v({1, 1})).has_value());
}

TEST_CASE("canonical directions") {
  CHECK(canonicalize_direction(v({-2, 4, -6})) == v({1, -2, 3}));
  Vec q = {Scalar(Rat(0), Rat(-1, 2), 5), Scalar(Rat(3, 2))};
  Vec c = canonicalize_direction(q);
  CHECK(c[0] == Scalar(Rat(0), Rat(1), 5));
  CHECK(c[1] == Scalar(-3));
  CHECK(proportional(v({1, -1, 0}), v({-3, 3, 0})));
  CHECK(!proportional(v({1, -1, 0}), v({1, 1, 0})));
}

TEST_CASE("strict feasibility") {
  // open positive quadrant: feasible
  auto w = strict_feasible({v({1, 0}), v({0, 1})}, 2);
  REQUIRE(w.has_value());
  CHECK(dot(v({1, 0}), *w) >= Scalar(1));
  // x > 0 and -x > 0: infeasible
  CHECK(!strict_feasible({v({1, 0}), v({-1, 0})}, 2).has_value());
  // a thin cone
  auto t = strict_feasible({v({1, -1000}), v({-1, 1001})}, 2);
  REQUIRE(t.has_value());
  CHECK(dot(v({1, -1000}), *t).sign() == 1);
  CHECK(dot(v({-1, 1001}), *t).sign() == 1);
  // no constraints: anything works
  CHECK(strict_feasible({}, 3).has_value());
  // cone open only after scaling: x+y>0, x-y>0, -x+2y>0
  auto u = strict_feasible({v({1, 1}), v({1, -1}), v({-1, 2})}, 2);
  REQUIRE(u.has_value());
}
