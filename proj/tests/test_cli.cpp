#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "topecycle/catalogue.hpp"
#include "topecycle/cli.hpp"
#include "topecycle/io.hpp"
#include "topecycle/lattice.hpp"

using namespace topecycle;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("topecycle_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("arrangement text round trip") {
  Arrangement b3 = generate({Family::B, 3});
  std::string text = write_arrangement(b3);
  Arrangement back = parse_arrangement_text(text);
  CHECK(back.same_hyperplanes(b3));
  CHECK(write_arrangement(back) == text);

  // quadratic coefficients
  Arrangement i5 = generate({Family::I2m, 0, 0, 5});
  CHECK(parse_arrangement_text(write_arrangement(i5)).same_hyperplanes(i5));
  Scalar c = Scalar::parse("1/2+1/3*sqrt", 5);
  CHECK(c == Scalar(Rat(1, 2), Rat(1, 3), 5));
}

TEST_CASE("parser reports malformed input") {
  CHECK_THROWS_AS(parse_arrangement_text("dim 2\nfield rational\nnormal 1\n"), Error);
  CHECK_THROWS_AS(parse_arrangement_text("field rational\nnormal 1 0\n"), Error);
  CHECK_THROWS_AS(parse_arrangement_text("dim 2\nfield quadratic 4\nnormal 1 0\n"), Error);
  // proportional normals
  CHECK_THROWS_AS(parse_arrangement_text("dim 2\nfield rational\nnormal 1 0\nnormal 2 0\n"),
                  Error);
  // quadratic coefficient in a rational file
  CHECK_THROWS_AS(
      parse_arrangement_text("dim 2\nfield rational\nnormal 1 1/2*sqrt\nnormal 0 1\n"), Error);
}

TEST_CASE("gen graph cycle verify pipeline") {
  TempDir tmp;
  std::string arr = tmp.file("r06.arr"), graph = tmp.file("r06.graph"),
              cycle = tmp.file("r06.cycle");
  CHECK(cli_run({"gen", "--family", "R0", "--m", "6", "--out", arr}) == 0);
  CHECK(cli_run({"graph", "--in", arr, "--out", graph}) == 0);
  CHECK(cli_run({"cycle", "--in", arr, "--method", "supersolvable", "--out", cycle}) == 0);
  CHECK(cli_run({"verify", "--graph", graph, "--cycle", cycle}) == 0);

  // the graph header carries the counts from the figure
  std::string gtext = read_file(graph);
  CHECK(gtext.substr(0, gtext.find('\n')) == "topes 20 edges 30 m 6");

  // determinism: regenerating produces identical bytes
  std::string arr2 = tmp.file("r06b.arr"), graph2 = tmp.file("r06b.graph");
  CHECK(cli_run({"gen", "--family", "R0", "--m", "6", "--out", arr2}) == 0);
  CHECK(cli_run({"graph", "--in", arr2, "--out", graph2}) == 0);
  CHECK(read_file(arr) == read_file(arr2));
  CHECK(read_file(graph) == read_file(graph2));

  // corrupted certificate: nonzero exit
  std::string cy = read_file(cycle);
  std::string bad = cy.substr(0, cy.size() - 3) + "99\n";
  write_file(tmp.file("bad.cycle"), bad);
  CHECK(cli_run({"verify", "--graph", graph, "--cycle", tmp.file("bad.cycle")}) != 0);
}

TEST_CASE("cycle methods and usage errors") {
  TempDir tmp;
  std::string arr = tmp.file("dns.arr");
  CHECK(cli_run({"gen", "--family", "Dns", "--n", "3", "--s", "1", "--out", arr}) == 0);
  CHECK(cli_run({"cycle", "--in", arr, "--method", "dns", "--out", tmp.file("c.cycle")}) == 0);

  // dns on a non-D_{n,s} arrangement: usage error
  std::string r1 = tmp.file("r1.arr");
  CHECK(cli_run({"gen", "--family", "R1", "--m", "5", "--out", r1}) == 0);
  CHECK(cli_run({"cycle", "--in", r1, "--method", "dns"}) != 0);

  // product method on a reducible arrangement
  std::string prod = tmp.file("prod.arr");
  Arrangement a2 = generate({Family::A, 3});
  Arrangement line(1, 0, {Vec{Scalar(1)}});
  write_file(prod, write_arrangement(product(a2, line)));
  CHECK(cli_run({"cycle", "--in", prod, "--method", "product", "--out", tmp.file("p.cycle")}) ==
        0);
  std::string pg = tmp.file("p.graph");
  CHECK(cli_run({"graph", "--in", prod, "--out", pg}) == 0);
  CHECK(cli_run({"verify", "--graph", pg, "--cycle", tmp.file("p.cycle")}) == 0);
  // product method on an irreducible arrangement: usage error
  CHECK(cli_run({"cycle", "--in", r1, "--method", "product"}) != 0);
}

TEST_CASE("sweep writes a manifest and verifies everything") {
  TempDir tmp;
  fs::create_directories(tmp.file("in"));
  CHECK(cli_run({"gen", "--family", "R0", "--m", "4", "--out", tmp.file("in/a.arr")}) == 0);
  CHECK(cli_run({"gen", "--family", "B", "--n", "3", "--out", tmp.file("in/b.arr")}) == 0);
  CHECK(cli_run({"gen", "--family", "I2m", "--m", "5", "--out", tmp.file("in/c.arr")}) == 0);
  std::string manifest = tmp.file("manifest.tsv");
  CHECK(cli_run({"sweep", "--dir", tmp.file("in"), "--outdir", tmp.file("out"), "--manifest",
                 manifest}) == 0);
  std::string text = read_file(manifest);
  // one row per arrangement, each verified
  int rows = 0, verified = 0;
  for (size_t pos = 0; (pos = text.find('\n', pos)) != std::string::npos; ++pos) ++rows;
  for (size_t pos = 0; (pos = text.find("\ttrue\t", pos)) != std::string::npos; ++pos) ++verified;
  CHECK(rows == 3);
  CHECK(verified == 3);

  // manifests are byte-identical apart from the timing column
  std::string manifest2 = tmp.file("manifest2.tsv");
  CHECK(cli_run({"sweep", "--dir", tmp.file("in"), "--outdir", tmp.file("out"), "--manifest",
                 manifest2}) == 0);
  auto strip_last_column = [](std::string s) {
    std::string out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out += line.substr(0, line.find_last_of('\t')) + "\n";
    return out;
  };
  CHECK(strip_last_column(read_file(manifest)) == strip_last_column(read_file(manifest2)));
}

TEST_CASE("sweep continues past failures and exits nonzero") {
  TempDir tmp;
  fs::create_directories(tmp.file("in"));
  CHECK(cli_run({"gen", "--family", "R0", "--m", "3", "--out", tmp.file("in/good.arr")}) == 0);
  write_file(tmp.file("in/broken.arr"), "dim 2\nfield rational\nnormal 1\n");
  std::string manifest = tmp.file("m.tsv");
  CHECK(cli_run({"sweep", "--dir", tmp.file("in"), "--outdir", tmp.file("out"), "--manifest",
                 manifest}) != 0);
  std::string text = read_file(manifest);
  CHECK(text.find("error:ParseError") != std::string::npos);
  CHECK(text.find("\ttrue\t") != std::string::npos); // the good file still verified
}

TEST_CASE("graph input with an explicit split chain") {
  TempDir tmp;
  std::string arr = tmp.file("b3.arr"), graph = tmp.file("b3.graph");
  CHECK(cli_run({"gen", "--family", "B", "--n", "3", "--out", arr}) == 0);
  CHECK(cli_run({"graph", "--in", arr, "--out", graph}) == 0);
  // the oriented-matroid entry point: tope graph + A1 index sets per level
  Arrangement a = read_arrangement(arr);
  auto d = supersolvable_decomposition(a);
  REQUIRE(d.has_value());
  std::string splits;
  for (const auto& lvl : d->chain) {
    for (size_t i = 0; i < lvl.a1.size(); ++i)
      splits += (i ? " " : "") + std::to_string(lvl.a1[i]);
    splits += "\n";
  }
  write_file(tmp.file("splits.txt"), splits);
  std::string cycle = tmp.file("b3.cycle");
  CHECK(cli_run({"cycle", "--in", graph, "--method", "supersolvable", "--splits",
                 tmp.file("splits.txt"), "--out", cycle}) == 0);
  CHECK(cli_run({"verify", "--graph", graph, "--cycle", cycle}) == 0);
  // missing the split chain is a usage error
  CHECK(cli_run({"cycle", "--in", graph, "--method", "supersolvable"}) != 0);
}

TEST_CASE("graph command supports the oracle algorithm") {
  TempDir tmp;
  std::string arr = tmp.file("ns.arr");
  // non-simplicial: appendixA must fail, the oracle must succeed
  write_file(arr,
             "dim 3\nfield rational\nnormal 1 0 0\nnormal 0 1 0\nnormal 0 0 1\nnormal 1 1 1\n");
  CHECK(cli_run({"graph", "--in", arr, "--algo", "appendixA", "--out", tmp.file("g")}) != 0);
  CHECK(cli_run({"graph", "--in", arr, "--algo", "oracle", "--out", tmp.file("g")}) == 0);
}
