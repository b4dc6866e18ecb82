#include <map>

#include "doctest.h"
#include "topecycle/builder.hpp"
#include "topecycle/catalogue.hpp"
#include "topecycle/oracle.hpp"

using namespace topecycle;

TEST_CASE("hyperplane counts match the definitions") {
  CHECK(generate({Family::A, 3}).size() == 3);
  CHECK(generate({Family::A, 5}).size() == 10);
  CHECK(generate({Family::B, 3}).size() == 9);
  CHECK(generate({Family::B, 4}).size() == 16);
  CHECK(generate({Family::D, 4}).size() == 12);
  CHECK(generate({Family::Dns, 4, 2}).size() == 14);
  CHECK(generate({Family::R0, 0, 0, 6}).size() == 6);
  CHECK(generate({Family::R1, 0, 0, 5}).size() == 10);
  CHECK(generate({Family::R2, 0, 0, 6}).size() == 25);
  CHECK(generate({Family::I2m, 0, 0, 5}).size() == 5);
  CHECK(generate({Family::I2m, 0, 0, 12}).size() == 12);
  CHECK_THROWS_AS(generate({Family::A, 1}), Error);
  CHECK_THROWS_AS(generate({Family::D, 3}), Error);
  CHECK_THROWS_AS(generate({Family::Dns, 4, 5}), Error);
  CHECK_THROWS_AS(generate({Family::I2m, 0, 0, 7}), Error);
  CHECK_THROWS_AS(generate({Family::R1, 0, 0, 7}), Error);
}

TEST_CASE("region counts of the generated families") {
  CHECK(build_tope_graph(generate({Family::A, 3})).tope_count() == 6);
  CHECK(build_tope_graph(generate({Family::A, 4})).tope_count() == 24);
  CHECK(build_tope_graph(generate({Family::B, 3})).tope_count() == 48);
  CHECK(build_tope_graph(generate({Family::Dns, 2, 1})).tope_count() == 6);
  CHECK(build_tope_graph(generate({Family::R0, 0, 0, 6})).tope_count() == 20);
  CHECK(build_tope_graph(generate({Family::I2m, 0, 0, 5})).tope_count() == 10);
  CHECK(build_tope_graph(generate({Family::I2m, 0, 0, 12})).tope_count() == 24);
}

TEST_CASE("Dns interpolates between D and B") {
  CHECK(generate({Family::Dns, 4, 4}).same_hyperplanes(generate({Family::B, 4})));
  CHECK(generate({Family::Dns, 4, 0}).same_hyperplanes(generate({Family::D, 4})));
  // B_2 minus e2 equals D_{2,1} up to reordering
  Arrangement b2 = generate({Family::B, 2});
  int e2 = b2.find({Scalar(0), Scalar(1)});
  REQUIRE(e2 >= 0);
  Deletion d = delete_hyperplanes(b2, {e2});
  CHECK(d.sub.same_hyperplanes(generate({Family::Dns, 2, 1})));
}

TEST_CASE("signed permutation topes") {
  // n=2, sigma=(1,2), delta=(+,+): witness (2,1)
  SignedPermutation sp{{1, 2}, {1, 1}};
  Arrangement b2 = generate({Family::B, 2});
  Tope t = tope_of_signed_perm(sp, b2);
  CHECK(t == Tope(4, '+')); // all normals positive at (2,1)

  // negating delta gives the opposite tope
  SignedPermutation spn{{1, 2}, {-1, -1}};
  CHECK(tope_of_signed_perm(spn, b2) == negated(t));
}

TEST_CASE("signed permutation adjacency rules") {
  SignedPermutation a{{1, 2}, {1, 1}};
  SignedPermutation b{{1, 2}, {1, -1}};  // delta flips at 2 = sigma(n)
  SignedPermutation c{{1, 2}, {-1, 1}};  // delta flips at 1 != sigma(n)
  SignedPermutation d{{2, 1}, {1, 1}};   // adjacent transposition
  auto ab = signed_perm_adjacent(a, b);
  REQUIRE(ab.has_value());
  CHECK(*ab == Vec{Scalar(0), Scalar(1)}); // H_{e_2}
  CHECK(!signed_perm_adjacent(a, c).has_value());
  auto ad = signed_perm_adjacent(a, d);
  REQUIRE(ad.has_value());
  CHECK(*ad == Vec{Scalar(1), Scalar(-1)}); // H_{e_1 - e_2}
  CHECK(!signed_perm_adjacent(a, a).has_value());
}

TEST_CASE("signed permutations are isomorphic to the B_n tope graph") {
  for (int n = 2; n <= 4; ++n) {
    Arrangement bn = generate({Family::B, n});
    TopeGraph g = build_tope_graph(bn);

    // enumerate all 2^n n! signed permutations
    std::vector<SignedPermutation> all;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> delta(n);
        for (int k = 0; k < n; ++k) delta[k] = (mask >> k) & 1 ? 1 : -1;
        all.push_back({perm, delta});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(int(all.size()) == g.tope_count());

    // bijection onto topes
    std::vector<Tope> topes;
    std::map<Tope, int> seen;
    for (const auto& sp : all) {
      topes.push_back(tope_of_signed_perm(sp, bn));
      seen[topes.back()]++;
    }
    CHECK(int(seen.size()) == g.tope_count());

    // edges correspond exactly under the bijection
    int found = 0, mismatches = 0;
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = i + 1; j < all.size(); ++j) {
        auto normal = signed_perm_adjacent(all[i], all[j]);
        bool edge = g.has_edge(g.index_of(topes[i]), g.index_of(topes[j]));
        if (normal.has_value() != edge) ++mismatches;
        if (normal.has_value()) {
          if (bn.find(*normal) != *adjacency(topes[i], topes[j])) ++mismatches;
          ++found;
        }
      }
    }
    CHECK(mismatches == 0);
    CHECK(found == g.edge_count());
  }
}

TEST_CASE("fixed-delta subgraphs look like A_{n-1}") {
  for (int n : {3, 4}) {
    Arrangement bn = generate({Family::B, n});
    TopeGraph g = build_tope_graph(bn);
    TopeGraph ga = build_tope_graph(generate({Family::A, n}));
    // count edges inside the all-plus orthant: must match |E(T(A_{n-1}))|
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<Tope> orthant;
    do {
      orthant.push_back(tope_of_signed_perm({perm, std::vector<int>(n, 1)}, bn));
    } while (std::next_permutation(perm.begin(), perm.end()));
    int inside = 0;
    for (size_t i = 0; i < orthant.size(); ++i)
      for (size_t j = i + 1; j < orthant.size(); ++j)
        if (g.has_edge(g.index_of(orthant[i]), g.index_of(orthant[j]))) ++inside;
    CHECK(int(orthant.size()) == ga.tope_count());
    CHECK(inside == ga.edge_count());
  }
}

TEST_CASE("quadratic families agree with the oracle") {
  Arrangement i5 = generate({Family::I2m, 0, 0, 5});
  CHECK(oracle_enumerate(i5) == build_tope_graph(i5));
  Arrangement r1_5 = generate({Family::R1, 0, 0, 5});
  CHECK(r1_5.field_d() == 5);
  TopeGraph g = build_tope_graph(r1_5);
  CHECK(g.tope_count() == 60); // 10 hyperplanes and 60 regions
  CHECK(oracle_enumerate(r1_5) == g);
}
