#include "doctest.h"
#include "topecycle/catalogue.hpp"
#include "topecycle/dns.hpp"

using namespace topecycle;

TEST_CASE("D_{2,1} is the hexagon") {
  HamiltonCertificate c = dns_cycle(2, 1);
  TopeGraph g = build_tope_graph(generate({Family::Dns, 2, 1}));
  CHECK(g.tope_count() == 6);
  CHECK(verify_certificate(g, c).ok());
}

TEST_CASE("small D_{n,s} instances verify") {
  for (auto [n, s] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}}) {
    CAPTURE(n);
    CAPTURE(s);
    DnsStats stats;
    HamiltonCertificate c = dns_cycle(n, s, {}, &stats);
    TopeGraph g = build_tope_graph(generate({Family::Dns, n, s}));
    CHECK(verify_certificate(g, c).ok());
  }
}

TEST_CASE("dns handles the boundary parameters") {
  // s = n delegates to B_n
  DnsStats stats;
  HamiltonCertificate c = dns_cycle(3, 3, {}, &stats);
  CHECK(stats.method == "supersolvable");
  TopeGraph g = build_tope_graph(generate({Family::B, 3}));
  CHECK(verify_certificate(g, c).ok());
  CHECK_THROWS_AS(dns_cycle(1, 0), Error);
  CHECK_THROWS_AS(dns_cycle(4, 5), Error);
}

TEST_CASE("tope count formula for D_{n,s}") {
  // |T(D_{n,s})| = (n-1)! 2^{n-1} (n+s)
  auto expected = [](int n, int s) {
    long long f = 1;
    for (int i = 2; i < n; ++i) f *= i;
    return f * (1LL << (n - 1)) * (n + s);
  };
  for (auto [n, s] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 0}, {4, 2}}) {
    TopeGraph g = build_tope_graph(generate({Family::Dns, n, s}));
    CHECK(g.tope_count() == expected(n, s));
  }
}
