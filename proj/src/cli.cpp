#include "topecycle/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numeric>

#include "CLI11.hpp"
#include "topecycle/catalogue.hpp"
#include "topecycle/dns.hpp"
#include "topecycle/hamilton.hpp"
#include "topecycle/io.hpp"
#include "topecycle/lattice.hpp"
#include "topecycle/oracle.hpp"

namespace topecycle {

namespace {

std::uint64_t seed_from_env() {
  const char* s = std::getenv("TOPECYCLE_SEED");
  if (!s) return 0;
  return std::strtoull(s, nullptr, 10);
}

BuildOptions default_options() {
  BuildOptions opt;
  opt.seed = seed_from_env();
  return opt;
}

TopeGraph graph_with_fallback(const Arrangement& a, const BuildOptions& opt,
                              std::string* algo = nullptr) {
  try {
    TopeGraph g = build_tope_graph(a, opt);
    if (algo) *algo = "appendixA";
    return g;
  } catch (const Error& e) {
    if (e.code() != Errc::NotSimplicial && e.code() != Errc::NotSimplicialCone) throw;
    if (algo) *algo = "oracle";
    return oracle_enumerate(a, opt.max_topes);
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

// ---- cycle construction with certificate indices in file order ----

struct CycleOutcome {
  HamiltonCertificate cert;
  std::string method;
};

// remap a certificate whose indices follow `canon` onto the hyperplane
// order of `file_arr` (same hyperplane set)
HamiltonCertificate remap_certificate(const HamiltonCertificate& c, const Arrangement& canon,
                                      const Arrangement& file_arr) {
  std::vector<int> canon_of_file(file_arr.size()), file_of_canon(canon.size(), -1);
  for (int i = 0; i < file_arr.size(); ++i) {
    int ci = canon.find(file_arr.hyperplane(i).normal);
    if (ci < 0) fail(Errc::InvalidInput, "internal: remap between different arrangements");
    canon_of_file[i] = ci;
    file_of_canon[ci] = i;
  }
  HamiltonCertificate out;
  out.start.resize(c.start.size());
  for (int i = 0; i < file_arr.size(); ++i) out.start[i] = c.start[canon_of_file[i]];
  for (int f : c.flips) out.flips.push_back(file_of_canon[f]);
  return out;
}

std::optional<std::pair<int, int>> detect_dns(const Arrangement& a) {
  int n = a.dim();
  if (n < 2) return std::nullopt;
  long long s = (long long)a.size() - (long long)n * (n - 1);
  if (s < 0 || s > n) return std::nullopt;
  if (a.field_d() != 0) return std::nullopt;
  try {
    Arrangement canon = generate({Family::Dns, n, int(s)});
    if (a.same_hyperplanes(canon)) return std::make_pair(n, int(s));
  } catch (const Error&) {
  }
  return std::nullopt;
}

// coordinate blocks: hyperplanes fall apart into independent factors iff
// the supports of their normals do
std::optional<std::vector<std::vector<int>>> detect_product(const Arrangement& a) {
  int n = a.dim();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& h : a.hyperplanes()) {
    int first = -1;
    for (int c = 0; c < n; ++c) {
      if (h.normal[c].is_zero()) continue;
      if (first < 0)
        first = c;
      else
        parent[find(c)] = find(first);
    }
  }
  std::map<int, std::vector<int>> groups; // component root -> hyperplane ids
  for (int i = 0; i < a.size(); ++i) {
    int c = 0;
    while (a.hyperplane(i).normal[c].is_zero()) ++c;
    groups[find(c)].push_back(i);
  }
  if (groups.size() < 2) return std::nullopt;
  std::vector<std::vector<int>> out;
  for (auto& [root, ids] : groups) out.push_back(std::move(ids));
  return out;
}

Arrangement factor_arrangement(const Arrangement& a, const std::vector<int>& hyp_ids,
                               std::vector<int>& coords) {
  std::set<int> used;
  for (int i : hyp_ids)
    for (int c = 0; c < a.dim(); ++c)
      if (!a.hyperplane(i).normal[c].is_zero()) used.insert(c);
  coords.assign(used.begin(), used.end());
  std::vector<Vec> normals;
  for (int i : hyp_ids) {
    Vec v;
    for (int c : coords) v.push_back(a.hyperplane(i).normal[c]);
    normals.push_back(std::move(v));
  }
  return Arrangement(int(coords.size()), a.field_d(), std::move(normals));
}

CycleOutcome cycle_for_arrangement(const Arrangement& a, const std::string& method,
                                   const BuildOptions& opt, long long budget);

CycleOutcome product_cycle_for(const Arrangement& a, const std::vector<std::vector<int>>& groups,
                               const BuildOptions& opt, long long budget) {
  // solve each factor, then fold the boustrophedon combiner left to right
  std::vector<int> order; // concatenated factor hyperplane ids, file indices
  std::optional<TopeGraph> acc_graph;
  std::optional<HamiltonCertificate> acc_cert;
  for (const auto& ids : groups) {
    std::vector<int> coords;
    Arrangement fac = factor_arrangement(a, ids, coords);
    CycleOutcome sub = cycle_for_arrangement(fac, "auto", opt, budget);
    TopeGraph fg = graph_with_fallback(fac, opt);
    if (!acc_graph) {
      acc_graph = fg;
      acc_cert = sub.cert;
    } else {
      HamiltonCertificate merged = product_cycle(*acc_graph, *acc_cert, fg, sub.cert);
      acc_graph = box_product(*acc_graph, fg);
      acc_cert = std::move(merged);
    }
    order.insert(order.end(), ids.begin(), ids.end());
  }
  // map concatenated factor indexing back onto file indices
  HamiltonCertificate out;
  out.start.resize(a.size());
  for (int k = 0; k < a.size(); ++k) out.start[order[k]] = acc_cert->start[k];
  for (int f : acc_cert->flips) out.flips.push_back(order[f]);
  return {std::move(out), "product"};
}

CycleOutcome cycle_for_arrangement(const Arrangement& a, const std::string& method,
                                   const BuildOptions& opt, long long budget) {
  if (method == "supersolvable" || method == "auto") {
    auto d = supersolvable_decomposition(a);
    if (d) {
      TopeGraph g = graph_with_fallback(a, opt);
      std::vector<std::vector<int>> chain;
      for (const auto& lvl : d->chain) chain.push_back(lvl.a1);
      return {supersolvable_cycle(g, chain), "supersolvable"};
    }
    if (method == "supersolvable")
      fail(Errc::NotSupersolvable, "arrangement is not supersolvable");
  }
  if (method == "dns" || method == "auto") {
    auto ns = detect_dns(a);
    if (ns) {
      auto [n, s] = *ns;
      HamiltonCertificate c = dns_cycle(n, s, opt);
      return {remap_certificate(c, generate({Family::Dns, n, s}), a), "dns"};
    }
    if (method == "dns")
      fail(Errc::InvalidInput, "arrangement is not of type D_{n,s} (or B_n/D_n)");
  }
  if (method == "product" || method == "auto") {
    auto groups = detect_product(a);
    if (groups) return product_cycle_for(a, *groups, opt, budget);
    if (method == "product") fail(Errc::InvalidInput, "arrangement is not a product");
  }
  if (method == "search" || method == "auto") {
    TopeGraph g = graph_with_fallback(a, opt);
    SearchResult res = search_cycle(g, budget);
    if (res.status == SearchResult::Found) return {*res.certificate, "search"};
    fail(Errc::InvalidInput, res.status == SearchResult::BudgetExceeded
                                 ? "search budget exceeded"
                                 : "graph has no Hamiltonian cycle");
  }
  fail(Errc::InvalidInput, "unknown cycle method '" + method + "'");
}

std::vector<std::vector<int>> parse_splits(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> chain;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> level;
    int idx;
    while (ls >> idx) level.push_back(idx);
    if (!level.empty()) chain.push_back(std::move(level));
  }
  return chain;
}

// ---- subcommands ----

int cmd_gen(const std::string& family, int n, int s, int m, const std::string& out) {
  FamilySpec spec{family_from_name(family), n, s, m};
  emit(out, write_arrangement(generate(spec)));
  return 0;
}

int cmd_graph(const std::string& in, const std::string& algo, const std::string& out,
              long long max_topes) {
  Arrangement a = read_arrangement(in);
  BuildOptions opt = default_options();
  opt.max_topes = max_topes;
  TopeGraph g = algo == "oracle" ? oracle_enumerate(a, max_topes) : build_tope_graph(a, opt);
  emit(out, write_tope_graph(g));
  return 0;
}

int cmd_lattice(const std::string& in) {
  Arrangement a = read_arrangement(in);
  Lattice l = build_lattice(a);
  std::cout << "rank " << l.rank << " flats " << l.flat_count() << "\n";
  for (int r = 0; r <= l.rank; ++r)
    std::cout << "rank " << r << ": " << l.by_rank[r].size() << "\n";
  auto d = supersolvable_decomposition(a);
  if (!d) {
    std::cout << "supersolvable: no\n";
    return 0;
  }
  std::cout << "supersolvable: yes\n";
  for (size_t k = 0; k < d->chain.size(); ++k) {
    std::cout << "level " << k << ": A0 =";
    for (int i : d->chain[k].a0) std::cout << " " << i;
    std::cout << " | A1 =";
    for (int i : d->chain[k].a1) std::cout << " " << i;
    std::cout << "\n";
  }
  return 0;
}

int cmd_cycle(const std::string& in, const std::string& method, const std::string& out,
              long long budget, const std::string& splits_path) {
  std::string text = read_file(in);
  std::istringstream peek(text);
  std::string first;
  peek >> first;
  BuildOptions opt = default_options();
  if (first == "dim") {
    Arrangement a = parse_arrangement_text(text);
    CycleOutcome res = cycle_for_arrangement(a, method, opt, budget);
    // TODO: reuse the tope graph built inside the constructors instead of
    // rebuilding it for this final verification pass.
    TopeGraph g = graph_with_fallback(a, opt);
    VerifyReport rep = verify_certificate(g, res.cert);
    if (!rep.ok()) fail(Errc::InvalidInput, "internal: constructed cycle failed verification");
    emit(out, write_certificate(res.cert));
    std::cerr << "method " << res.method << " topes " << g.tope_count() << "\n";
    return 0;
  }
  if (first == "topes") {
    TopeGraph g = parse_tope_graph(text);
    HamiltonCertificate cert;
    std::string used;
    if (method == "supersolvable" || (!splits_path.empty() && method == "auto")) {
      if (splits_path.empty())
        fail(Errc::InvalidInput, "graph input with method supersolvable needs --splits");
      cert = supersolvable_cycle(g, parse_splits(read_file(splits_path)));
      used = "supersolvable";
    } else if (method == "search" || method == "auto") {
      SearchResult res = search_cycle(g, budget);
      if (res.status != SearchResult::Found)
        fail(Errc::InvalidInput, res.status == SearchResult::BudgetExceeded
                                     ? "search budget exceeded"
                                     : "graph has no Hamiltonian cycle");
      cert = *res.certificate;
      used = "search";
    } else {
      fail(Errc::InvalidInput, "method '" + method + "' needs an arrangement input");
    }
    emit(out, write_certificate(cert));
    std::cerr << "method " << used << " topes " << g.tope_count() << "\n";
    return 0;
  }
  fail(Errc::ParseError, "input is neither an arrangement nor a tope graph");
}

int cmd_verify(const std::string& graph_path, const std::string& cycle_path) {
  TopeGraph g = parse_tope_graph(read_file(graph_path));
  HamiltonCertificate c = parse_certificate(read_file(cycle_path));
  VerifyReport rep = verify_certificate(g, c);
  if (rep.ok()) {
    std::cout << "ok topes " << g.tope_count() << "\n";
    return 0;
  }
  std::cout << "error " << verify_status_name(rep.status) << " step " << rep.step << " "
            << rep.detail << "\n";
  return 1;
}

int cmd_sweep(const std::string& dir, const std::string& outdir, long long budget,
              const std::string& manifest_path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".arr")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  fs::create_directories(outdir);

  std::ostringstream manifest;
  bool all_ok = true;
  for (const auto& path : files) {
    auto t0 = std::chrono::steady_clock::now();
    std::string stem = path.stem().string();
    std::string cert_file;
    std::string method = "-";
    long long m = 0, topes = 0, edges = 0;
    bool verified = false;
    try {
      Arrangement a = read_arrangement(path.string());
      m = a.size();
      BuildOptions opt = default_options();
      TopeGraph g = graph_with_fallback(a, opt);
      topes = g.tope_count();
      edges = g.edge_count();
      write_file((fs::path(outdir) / (stem + ".graph.txt")).string(), write_tope_graph(g));
      CycleOutcome res = cycle_for_arrangement(a, "auto", opt, budget);
      method = res.method;
      cert_file = (fs::path(outdir) / (stem + ".cycle.txt")).string();
      write_file(cert_file, write_certificate(res.cert));
      verified = verify_certificate(g, parse_certificate(read_file(cert_file))).ok();
    } catch (const Error& e) {
      method = std::string("error:") + errc_name(e.code());
    }
    all_ok = all_ok && verified;
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    manifest << path.string() << "\t" << m << "\t" << topes << "\t" << edges << "\t" << method
             << "\t" << cert_file << "\t" << (verified ? "true" : "false") << "\t" << secs
             << "\n";
  }
  std::cout << manifest.str();
  if (!manifest_path.empty()) write_file(manifest_path, manifest.str());
  return all_ok ? 0 : 1;
}

} // namespace

int cli_run(const std::vector<std::string>& args) {
  CLI::App app{"tope graphs and Hamiltonian cycles of simplicial arrangements"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a catalogue arrangement");
  std::string family, out;
  int n = 0, s = 0, m = 0;
  gen->add_option("--family", family, "A|B|D|Dns|I2m|R0|R1|R2")->required();
  gen->add_option("--n", n, "rank parameter");
  gen->add_option("--s", s, "coordinate hyperplane count (Dns)");
  gen->add_option("--m", m, "line/plane count (I2m, R0, R1, R2)");
  gen->add_option("--out", out, "output file (stdout when omitted)");

  auto* graph = app.add_subcommand("graph", "compute a tope graph");
  std::string gin, galgo = "appendixA", gout;
  long long gmax = 1000000;
  graph->add_option("--in", gin, "arrangement file")->required();
  graph->add_option("--algo", galgo, "appendixA|oracle")
      ->check(CLI::IsMember({"appendixA", "oracle"}));
  graph->add_option("--out", gout, "output file (stdout when omitted)");
  graph->add_option("--max-topes", gmax, "tope limit");

  auto* lattice = app.add_subcommand("lattice", "intersection lattice summary");
  std::string lin;
  lattice->add_option("--in", lin, "arrangement file")->required();

  auto* cycle = app.add_subcommand("cycle", "construct a Hamiltonian cycle");
  std::string cin, cmethod = "auto", cout_path, csplits;
  long long cbudget = 50000000;
  cycle->add_option("--in", cin, "arrangement or tope-graph file")->required();
  cycle->add_option("--method", cmethod, "auto|supersolvable|dns|product|search")
      ->check(CLI::IsMember({"auto", "supersolvable", "dns", "product", "search"}));
  cycle->add_option("--out", cout_path, "output file (stdout when omitted)");
  cycle->add_option("--budget", cbudget, "search node budget");
  cycle->add_option("--splits", csplits, "A1 index sets per level (graph input)");

  auto* verify = app.add_subcommand("verify", "check a cycle certificate");
  std::string vgraph, vcycle;
  verify->add_option("--graph", vgraph, "tope-graph file")->required();
  verify->add_option("--cycle", vcycle, "certificate file")->required();

  auto* sweep = app.add_subcommand("sweep", "graph+cycle+verify over a directory");
  std::string sdir, soutdir = "sweep_out", smanifest;
  long long sbudget = 50000000;
  sweep->add_option("--dir", sdir, "directory of .arr files")->required();
  sweep->add_option("--outdir", soutdir, "output directory");
  sweep->add_option("--budget", sbudget, "search node budget");
  sweep->add_option("--manifest", smanifest, "also write the manifest here");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error Usage " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(family, n, s, m, out);
    if (graph->parsed()) return cmd_graph(gin, galgo, gout, gmax);
    if (lattice->parsed()) return cmd_lattice(lin);
    if (cycle->parsed()) return cmd_cycle(cin, cmethod, cout_path, cbudget, csplits);
    if (verify->parsed()) return cmd_verify(vgraph, vcycle);
    if (sweep->parsed()) return cmd_sweep(sdir, soutdir, sbudget, smanifest);
  } catch (const Error& e) {
    std::cerr << "error " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error Internal " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace topecycle
