// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit status 0 iff all pass.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "topecycle/catalogue.hpp"
#include "topecycle/cli.hpp"
#include "topecycle/dns.hpp"
#include "topecycle/hamilton.hpp"
#include "topecycle/io.hpp"
#include "topecycle/lattice.hpp"
#include "topecycle/oracle.hpp"

using namespace topecycle;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  bool ok = true;
  std::ostringstream notes;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  explicit Criterion(std::string n) : name(std::move(n)) {}
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "  FAIL " << what << "\n";
    }
  }
  void finish() {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << secs << "s)\n"
              << notes.str();
    if (!ok) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Arrangement rational_slopes_2d(int m) {
  // m pairwise independent rational directions: (1,0) and (k,1)
  std::vector<Vec> normals = {{Scalar(1), Scalar(0)}};
  for (int k = 0; k + 1 < m; ++k) normals.push_back({Scalar(k), Scalar(1)});
  return Arrangement(2, 0, std::move(normals));
}

// The icosahedral mirror arrangement: 15 planes over Q(sqrt 5), 120
// regions.  Not produced by any built-in generator; stands in for a
// user-supplied sporadic arrangement file.
Arrangement icosahedral_h3() {
  Scalar tau(Rat(1, 2), Rat(1, 2), 5);      // golden ratio
  Scalar tau_inv(Rat(-1, 2), Rat(1, 2), 5); // 1/tau = tau - 1
  std::vector<Vec> normals;
  for (int i = 0; i < 3; ++i) {
    Vec e(3, Scalar(0));
    e[i] = Scalar(1);
    normals.push_back(std::move(e));
  }
  for (int rot = 0; rot < 3; ++rot) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        Vec v(3);
        v[rot] = Scalar(1);
        v[(rot + 1) % 3] = s1 == 1 ? tau : -tau;
        v[(rot + 2) % 3] = s2 == 1 ? tau_inv : -tau_inv;
        normals.push_back(std::move(v));
      }
    }
  }
  return Arrangement(3, 5, std::move(normals));
}

void criterion_region_fixtures() {
  Criterion c("region-count fixtures: R0(6)=20, R1(5)=60, R2 figure=96");
  auto timed_count = [&](const FamilySpec& spec, int hyps, int topes) {
    auto t0 = std::chrono::steady_clock::now();
    Arrangement a = generate(spec);
    TopeGraph g = build_tope_graph(a);
    double secs = seconds_since(t0);
    std::string label = family_name(spec.family) + "(" + std::to_string(spec.m) + ")";
    c.expect(a.size() == hyps, label + " hyperplane count " + std::to_string(a.size()));
    c.expect(g.tope_count() == topes,
             label + " tope count " + std::to_string(g.tope_count()) + " expected " +
                 std::to_string(topes));
    c.expect(secs < 5.0, label + " took " + std::to_string(secs) + "s (limit 5s)");
  };
  timed_count({Family::R0, 0, 0, 6}, 6, 20);
  timed_count({Family::R1, 0, 0, 5}, 10, 60);
  // The figure's 96-region arrangement is the hexagon member: 13 planes.
  // Its caption advertises 25 planes; the genuine 25-plane member has 336
  // regions, pinned here as well (both counts are exact and oracle-checked
  // in the equivalence criterion).
  timed_count({Family::R2, 0, 0, 3}, 13, 96);
  timed_count({Family::R2, 0, 0, 6}, 25, 336);
  c.finish();
}

void criterion_counting_identities() {
  Criterion c("counting identities: |T(A_{n-1})| = n!, |T(B_n)| = 2^n n!, edges = rank*topes/2");
  for (int n = 2; n <= 7; ++n) {
    Arrangement a = generate({Family::A, n});
    TopeGraph g = build_tope_graph(a);
    c.expect(g.tope_count() == factorial(n),
             "A_" + std::to_string(n - 1) + " topes " + std::to_string(g.tope_count()));
    c.expect(2LL * g.edge_count() == (long long)a.rank() * g.tope_count(),
             "A_" + std::to_string(n - 1) + " edge identity");
  }
  for (int n = 2; n <= 6; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    Arrangement a = generate({Family::B, n});
    TopeGraph g = build_tope_graph(a);
    double secs = seconds_since(t0);
    c.expect(g.tope_count() == (1LL << n) * factorial(n),
             "B_" + std::to_string(n) + " topes " + std::to_string(g.tope_count()));
    c.expect(2LL * g.edge_count() == (long long)a.rank() * g.tope_count(),
             "B_" + std::to_string(n) + " edge identity");
    if (n == 6) c.expect(secs < 300.0, "B_6 took " + std::to_string(secs) + "s (limit 300s)");
  }
  c.finish();
}

void criterion_builder_oracle() {
  Criterion c("builder-oracle equivalence on every generated instance with <= 2000 topes");
  std::vector<FamilySpec> specs;
  for (int n = 2; n <= 5; ++n) specs.push_back({Family::A, n});
  for (int n = 2; n <= 4; ++n) specs.push_back({Family::B, n});
  specs.push_back({Family::D, 4});
  for (int n = 2; n <= 4; ++n)
    for (int s = 0; s <= n; ++s) specs.push_back({Family::Dns, n, s});
  for (int m = 3; m <= 12; ++m) specs.push_back({Family::R0, 0, 0, m});
  for (int m : {3, 4, 5, 6, 8, 10, 12}) specs.push_back({Family::R1, 0, 0, m});
  for (int m : {2, 3, 4, 5}) specs.push_back({Family::R2, 0, 0, m});
  for (int m : {3, 4, 5, 6, 8, 12}) specs.push_back({Family::I2m, 0, 0, m});
  int checked = 0;
  for (const auto& spec : specs) {
    Arrangement a = generate(spec);
    TopeGraph built = build_tope_graph(a);
    if (built.tope_count() > 2000) continue;
    TopeGraph oracle = oracle_enumerate(a);
    ++checked;
    std::string label = family_name(spec.family) + " n=" + std::to_string(spec.n) +
                        " s=" + std::to_string(spec.s) + " m=" + std::to_string(spec.m);
    c.expect(built == oracle, "mismatch on " + label);
    try {
      // degree regularity and central symmetry of the builder output
      check_tope_graph_invariants(built, a.rank());
    } catch (const Error& e) {
      c.expect(false, label + ": " + e.what());
    }
  }
  c.notes << "  " << checked << " instances compared exactly\n";
  c.finish();
}

void criterion_contraction() {
  Criterion c("contraction identity: contract(T(B_n), {e_{s+1}..e_n}) = T(D_{n,s}), n <= 5");
  for (int n = 2; n <= 5; ++n) {
    Arrangement bn = generate({Family::B, n});
    TopeGraph gb = build_tope_graph(bn);
    for (int s = 0; s <= n; ++s) {
      std::set<int> drop;
      for (int i = s; i < n; ++i) {
        Vec e(n, Scalar(0));
        e[i] = Scalar(1);
        int idx = bn.find(e);
        drop.insert(idx);
      }
      TopeGraph contracted = contract_graph(gb, drop);
      TopeGraph direct = build_tope_graph(generate({Family::Dns, n, s}));
      c.expect(contracted == direct,
               "B_" + std::to_string(n) + " -> D_{" + std::to_string(n) + "," +
                   std::to_string(s) + "}");
    }
  }
  c.finish();
}

void criterion_supersolvable() {
  Criterion c("supersolvable constructor: 2D m<=20, R0 m<=12, R1 {3..6}, R2 {2,3}, B_n n<=5, products");
  auto check = [&](const Arrangement& a, const std::string& label) {
    try {
      HamiltonCertificate cert = supersolvable_cycle(a);
      TopeGraph g = build_tope_graph(a);
      c.expect(verify_certificate(g, cert).ok(), label + " certificate rejected");
    } catch (const Error& e) {
      c.expect(false, label + " threw " + e.what());
    }
  };
  for (int m = 1; m <= 20; ++m) check(rational_slopes_2d(m), "2D m=" + std::to_string(m));
  for (int m : {3, 4, 5, 6, 8, 12})
    check(generate({Family::I2m, 0, 0, m}), "I2m m=" + std::to_string(m));
  for (int m = 3; m <= 12; ++m) check(generate({Family::R0, 0, 0, m}), "R0 m=" + std::to_string(m));
  for (int m : {3, 4, 5, 6}) check(generate({Family::R1, 0, 0, m}), "R1 m=" + std::to_string(m));
  for (int m : {2, 3}) check(generate({Family::R2, 0, 0, m}), "R2 m=" + std::to_string(m));
  for (int n = 2; n <= 5; ++n) check(generate({Family::B, n}), "B_" + std::to_string(n));
  check(product(generate({Family::R0, 0, 0, 4}), generate({Family::R0, 0, 0, 5})),
        "R0(4) x R0(5)");
  check(product(generate({Family::R0, 0, 0, 3}), generate({Family::R0, 0, 0, 3})),
        "R0(3) x R0(3)");
  c.finish();
}

void criterion_dns() {
  Criterion c("D_{n,s} constructor: all 1 <= s <= n-1, n <= 6; n=6 ledger conflict-free");
  auto t6 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 6; ++n) {
    for (int s = 1; s <= n - 1; ++s) {
      std::string label = "D_{" + std::to_string(n) + "," + std::to_string(s) + "}";
      try {
        DnsStats stats;
        HamiltonCertificate cert = dns_cycle(n, s, {}, &stats);
        TopeGraph g = build_tope_graph(generate({Family::Dns, n, s}));
        c.expect(verify_certificate(g, cert).ok(), label + " certificate rejected");
        if (n == 6) {
          c.expect(stats.method == "glue", label + " did not use the gluing construction");
          c.expect(stats.min_pair_candidates >= 6,
                   label + " disjoint quadrilaterals per pair = " +
                       std::to_string(stats.min_pair_candidates) + " < (n-2)!/4 = 6");
        }
      } catch (const Error& e) {
        c.expect(false, label + " threw " + e.what());
      }
    }
  }
  double secs6 = seconds_since(t6);
  c.expect(secs6 < 600.0, "n<=6 suite took " + std::to_string(secs6) + "s (limit 600s)");
  c.finish();
}

void criterion_product() {
  Criterion c("product combiner: K2xK2, hexagon x K2, hexagon x hexagon, T(A_2) x T(B_2)");
  Arrangement line(1, 0, {Vec{Scalar(1)}});
  Arrangement a2 = generate({Family::A, 3});
  Arrangement b2 = generate({Family::B, 2});
  TopeGraph gk = build_tope_graph(line);
  TopeGraph gh = build_tope_graph(a2);
  TopeGraph gb = build_tope_graph(b2);
  HamiltonCertificate ck{"+", {0, 0}};
  HamiltonCertificate ch = supersolvable_cycle(a2);
  HamiltonCertificate cb = supersolvable_cycle(b2);

  auto verify_product = [&](const TopeGraph& g1, const HamiltonCertificate& c1,
                            const TopeGraph& g2, const HamiltonCertificate& c2,
                            const Arrangement& pa, const std::string& label) {
    HamiltonCertificate merged = product_cycle(g1, c1, g2, c2);
    TopeGraph gp = build_tope_graph(pa);
    c.expect(verify_certificate(gp, merged).ok(), label);
    c.expect(int(merged.flips.size()) == g1.tope_count() * g2.tope_count(),
             label + " length identity");
  };
  verify_product(gk, ck, gk, ck, product(line, line), "K2 x K2");
  verify_product(gh, ch, gk, ck, product(a2, line), "hexagon x K2");
  verify_product(gh, ch, gh, ch, product(a2, a2), "hexagon x hexagon");
  verify_product(gh, ch, gb, cb, product(a2, b2), "T(A_2) x T(B_2)");
  c.finish();
}

void criterion_desk_scale() {
  Criterion c("desk-scale substitute: search+verify on rank-3 files; supersolvability agreement");
  // rank-3 instances written to files and consumed as user input
  fs::path dir = fs::temp_directory_path() / "topecycle_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::pair<std::string, Arrangement>> files;
  files.push_back({"r0_10", generate({Family::R0, 0, 0, 10})});
  files.push_back({"r1_6", generate({Family::R1, 0, 0, 6})});
  files.push_back({"r1_12", generate({Family::R1, 0, 0, 12})});
  files.push_back({"r2_3", generate({Family::R2, 0, 0, 3})});
  files.push_back({"r2_6", generate({Family::R2, 0, 0, 6})});
  files.push_back({"d31", generate({Family::Dns, 3, 1})});
  files.push_back({"d32", generate({Family::Dns, 3, 2})});
  files.push_back({"h3", icosahedral_h3()});
  for (const auto& [name, a] : files) {
    std::string path = (dir / (name + ".arr")).string();
    write_file(path, write_arrangement(a));
    Arrangement back = read_arrangement(path);
    c.expect(back.rank() == 3, name + " rank");
    TopeGraph g = build_tope_graph(back);
    c.expect(g.tope_count() <= 5000, name + " size");
    SearchResult res = search_cycle(g);
    c.expect(res.status == SearchResult::Found, name + " search failed");
    if (res.certificate) {
      VerifyReport rep = verify_certificate(g, *res.certificate);
      c.expect(rep.ok(), name + " verification");
      // Gray-code, spanning, closure invariants, asserted directly
      std::vector<Tope> seq = certificate_topes(*res.certificate);
      bool gray = true;
      for (size_t i = 0; i < seq.size(); ++i)
        gray = gray && adjacency(seq[i], seq[(i + 1) % seq.size()]).has_value();
      c.expect(gray, name + " gray-code property");
      c.expect(int(seq.size()) == g.tope_count(), name + " spanning length");
    }
  }
  // classification agreement
  for (int m : {3, 6, 9}) {
    c.expect(supersolvable_decomposition(generate({Family::R0, 0, 0, m})).has_value(),
             "R0(" + std::to_string(m) + ") must be supersolvable");
  }
  for (int m : {3, 4, 5, 6}) {
    c.expect(supersolvable_decomposition(generate({Family::R1, 0, 0, m})).has_value(),
             "R1(" + std::to_string(m) + ") must be supersolvable");
  }
  for (int m : {2, 3}) {
    c.expect(supersolvable_decomposition(generate({Family::R2, 0, 0, m})).has_value(),
             "R2(" + std::to_string(m) + ") must be supersolvable");
  }
  c.expect(!supersolvable_decomposition(generate({Family::D, 4})).has_value(),
           "D_4 must not be supersolvable");
  c.expect(!supersolvable_decomposition(generate({Family::D, 5})).has_value(),
           "D_5 must not be supersolvable");
  // full pipeline through the CLI on the same directory
  int rc = cli_run({"sweep", "--dir", dir.string(), "--outdir", (dir / "out").string(),
                    "--manifest", (dir / "manifest.tsv").string()});
  c.expect(rc == 0, "CLI sweep over the rank-3 files exited " + std::to_string(rc));
  c.finish();
}

} // namespace

int main() {
  std::cout << "acceptance suite\n";
  criterion_region_fixtures();
  criterion_counting_identities();
  criterion_builder_oracle();
  criterion_contraction();
  criterion_supersolvable();
  criterion_dns();
  criterion_product();
  criterion_desk_scale();
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
