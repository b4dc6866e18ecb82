#include "doctest.h"
#include "topecycle/arrangement.hpp"
#include "topecycle/builder.hpp"
#include "topecycle/oracle.hpp"

using namespace topecycle;

namespace {
Vec v(std::initializer_list<long long> xs) {
  Vec r;
  for (auto x : xs) r.push_back(Scalar(x));
  return r;
}

Arrangement b2() { return Arrangement(2, 0, {v({1, 0}), v({0, 1}), v({1, -1}), v({1, 1})}); }
Arrangement b3() {
  return Arrangement(3, 0,
                     {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({1, -1, 0}), v({1, 1, 0}),
                      v({1, 0, -1}), v({1, 0, 1}), v({0, 1, -1}), v({0, 1, 1})});
}
} // namespace

TEST_CASE("construction canonicalizes and rejects duplicates") {
  Arrangement a(2, 0, {v({0, -2}), v({3, 3})});
  CHECK(a.hyperplane(0).normal == v({0, 1}));
  CHECK(a.hyperplane(1).normal == v({1, 1}));
  CHECK(a.rank() == 2);
  CHECK_THROWS_AS(Arrangement(2, 0, {v({1, 1}), v({-2, -2})}), Error);
  CHECK_THROWS_AS(Arrangement(2, 0, {v({0, 0})}), Error);
  CHECK_THROWS_AS(Arrangement(2, 0, std::vector<Vec>{}), Error);
  // coefficient outside the declared field
  CHECK_THROWS_AS(Arrangement(1, 0, {Vec{Scalar(Rat(0), Rat(1), 2)}}), Error);
}

TEST_CASE("deletion compacts indices and keeps order") {
  Arrangement a = b2();
  Deletion d = delete_hyperplanes(a, {1}); // drop e2
  CHECK(d.sub.size() == 3);
  CHECK(d.old_to_new == std::vector<int>{0, -1, 1, 2});
  CHECK(d.new_to_old == std::vector<int>{0, 2, 3});
  // B_2 minus a coordinate hyperplane is D_{2,1} = {e1, e1-e2, e1+e2}
  Arrangement dns(2, 0, {v({1, 0}), v({1, -1}), v({1, 1})});
  CHECK(d.sub.same_hyperplanes(dns));

  CHECK_THROWS_AS(delete_hyperplanes(a, {0, 1, 2, 3}), Error);
  Deletion none = delete_hyperplanes(a, {});
  CHECK(none.sub.same_hyperplanes(a));
}

TEST_CASE("restriction computes induced arrangements") {
  // Boolean restriction is a coordinate deletion
  Arrangement boolean3(3, 0, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  Arrangement r = restrict_to(boolean3, 2);
  CHECK(r.dim() == 2);
  CHECK(r.size() == 2);
  CHECK(r.rank() == 2);

  // A_2 restricted to a hyperplane: the two other planes cut the same line
  Arrangement a2(3, 0, {v({1, -1, 0}), v({1, 0, -1}), v({0, 1, -1})});
  Arrangement ra = restrict_to(a2, 0);
  CHECK(ra.size() == 1);

  // B_3 restricted to H_{e3} is B_2 (duplicates e1+-e3 -> e1 merge)
  Arrangement rb = restrict_to(b3(), 2);
  CHECK(rb.size() == 4);
  CHECK(rb.rank() == 2);
  Arrangement b2_in_r2(2, 0, {v({1, 0}), v({0, 1}), v({1, -1}), v({1, 1})});
  CHECK(rb.same_hyperplanes(b2_in_r2));
}

TEST_CASE("products pad blocks and reject mixed fields") {
  Arrangement l1(1, 0, {v({1})});
  Arrangement p = product(l1, l1);
  CHECK(p.dim() == 2);
  CHECK(p.hyperplane(0).normal == v({1, 0}));
  CHECK(p.hyperplane(1).normal == v({0, 1}));

  Arrangement q2(1, 2, {Vec{Scalar(Rat(0), Rat(1), 2)}});
  Arrangement q3(1, 3, {Vec{Scalar(Rat(0), Rat(1), 3)}});
  CHECK_THROWS_AS(product(q2, q3), Error);
  CHECK(product(q2, l1).field_d() == 2); // rational embeds in Q(sqrt 2)

  // A_2 x {e1}: 4 hyperplanes in R^4 with 12 topes
  Arrangement a2(3, 0, {v({1, -1, 0}), v({1, 0, -1}), v({0, 1, -1})});
  Arrangement pr = product(a2, l1);
  CHECK(pr.dim() == 4);
  CHECK(pr.size() == 4);
  CHECK(oracle_enumerate(pr).tope_count() == 12);
}

TEST_CASE("essentialization preserves topes") {
  // A_2 has rank 2 in R^3
  Arrangement a2(3, 0, {v({1, -1, 0}), v({1, 0, -1}), v({0, 1, -1})});
  Essentialization e = essentialize(a2);
  CHECK(e.rank == 2);
  CHECK(e.normals.size() == 3);
  TopeGraph g = build_tope_graph(a2);
  CHECK(g.tope_count() == 6);
}

TEST_CASE("oracle equals builder on small instances") {
  Arrangement a2(3, 0, {v({1, -1, 0}), v({1, 0, -1}), v({0, 1, -1})});
  CHECK(oracle_enumerate(a2) == build_tope_graph(a2));
  CHECK(oracle_enumerate(b2()) == build_tope_graph(b2()));
  Arrangement single(2, 0, {v({1, 7})});
  TopeGraph g = oracle_enumerate(single);
  CHECK(g.tope_count() == 2);
  CHECK(g.edge_count() == 1);
  Arrangement boolean4(4, 0, {v({1, 0, 0, 0}), v({0, 1, 0, 0}), v({0, 0, 1, 0}), v({0, 0, 0, 1})});
  CHECK(oracle_enumerate(boolean4).tope_count() == 16);
  // a non-simplicial arrangement the builder rejects, the oracle handles
  Arrangement ns(3, 0, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({1, 1, 1})});
  TopeGraph gns = oracle_enumerate(ns);
  CHECK(gns.tope_count() == 14);
  check_tope_graph_invariants(gns);
}
