#include "topecycle/tope.hpp"

#include <algorithm>
#include <sstream>

namespace topecycle {

Tope flipped(const Tope& t, int i) {
  Tope r = t;
  r[i] = (r[i] == '+') ? '-' : '+';
  return r;
}

Tope negated(const Tope& t) {
  Tope r = t;
  for (auto& c : r) c = (c == '+') ? '-' : '+';
  return r;
}

std::optional<int> adjacency(const Tope& a, const Tope& b) {
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "topes of different length");
  int where = -1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (where >= 0) return std::nullopt;
    where = int(i);
  }
  if (where < 0) return std::nullopt;
  return where;
}

TopeGraph::TopeGraph(int m, std::vector<Tope> topes, std::vector<GraphEdge> edges) : m_(m) {
  for (const auto& t : topes) {
    if (int(t.size()) != m) fail(Errc::InvalidInput, "tope length differs from m");
    for (char c : t)
      if (c != '+' && c != '-') fail(Errc::InvalidInput, "tope characters must be + or -");
  }
  // Edge endpoints reference the incoming tope order; remap them onto the
  // canonical (sorted, deduplicated) order.
  std::vector<Tope> original = topes;
  std::sort(topes.begin(), topes.end());
  topes.erase(std::unique(topes.begin(), topes.end()), topes.end());
  topes_ = std::move(topes);
  for (size_t i = 0; i < topes_.size(); ++i) index_[topes_[i]] = int(i);

  std::set<GraphEdge> canon;
  for (auto e : edges) {
    if (e.a < 0 || e.b < 0) fail(Errc::InvalidInput, "negative tope id in edge");
    if (e.a >= int(original.size()) || e.b >= int(original.size()))
      fail(Errc::InvalidInput, "edge endpoint out of range");
    e.a = index_[original[e.a]];
    e.b = index_[original[e.b]];
    if (e.a == e.b) fail(Errc::InvalidInput, "loop edge");
    if (e.a > e.b) std::swap(e.a, e.b);
    auto d = adjacency(topes_[e.a], topes_[e.b]);
    if (!d || *d != e.type)
      fail(Errc::InvalidInput, "edge endpoints must differ exactly at the edge type");
    canon.insert(e);
  }
  edges_.assign(canon.begin(), canon.end());
  adj_.assign(topes_.size(), {});
  for (const auto& e : edges_) {
    adj_[e.a].push_back({e.b, e.type});
    adj_[e.b].push_back({e.a, e.type});
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int TopeGraph::index_of(const Tope& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? -1 : it->second;
}

bool TopeGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto& nb = adj_[a];
  for (const auto& [v, ty] : nb)
    if (v == b) return true;
  return false;
}

void check_tope_graph_invariants(const TopeGraph& g, int expected_rank) {
  for (const auto& t : g.topes()) {
    if (g.index_of(negated(t)) < 0)
      fail(Errc::InvalidInput, "central symmetry violated at tope " + t);
  }
  for (const auto& e : g.edges()) {
    Tope na = negated(g.tope(e.a)), nb = negated(g.tope(e.b));
    int ia = g.index_of(na), ib = g.index_of(nb);
    if (ia < 0 || ib < 0 || !g.has_edge(ia, ib))
      fail(Errc::InvalidInput, "central symmetry violated on an edge");
  }
  // connectivity
  if (g.tope_count() > 0) {
    std::vector<bool> seen(g.tope_count(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [u, ty] : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          ++visited;
          stack.push_back(u);
        }
      }
    }
    if (visited != g.tope_count()) fail(Errc::InvalidInput, "tope graph is disconnected");
  }
  if (expected_rank >= 0) {
    for (int v = 0; v < g.tope_count(); ++v) {
      if (g.degree(v) != expected_rank)
        fail(Errc::InvalidInput, "vertex degree " + std::to_string(g.degree(v)) +
                                     " differs from rank " + std::to_string(expected_rank) +
                                     " at tope " + g.tope(v));
    }
  }
}

Tope project_tope(const Tope& t, const std::vector<int>& old_to_new) {
  if (t.size() != old_to_new.size()) fail(Errc::LengthMismatch, "index map length mismatch");
  int kept = 0;
  for (int v : old_to_new) kept = std::max(kept, v + 1);
  Tope r(kept, '?');
  for (size_t i = 0; i < old_to_new.size(); ++i)
    if (old_to_new[i] >= 0) r[old_to_new[i]] = t[i];
  return r;
}

TopeGraph contract_graph(const TopeGraph& g, const std::set<int>& drop) {
  for (int i : drop)
    if (i < 0 || i >= g.m()) fail(Errc::InvalidInput, "contract index out of range");
  std::vector<int> old_to_new(g.m(), -1);
  int next = 0;
  for (int i = 0; i < g.m(); ++i)
    if (!drop.count(i)) old_to_new[i] = next++;
  if (next == 0) fail(Errc::DropAll, "contracting every hyperplane");

  std::vector<Tope> topes;
  for (const auto& t : g.topes()) topes.push_back(project_tope(t, old_to_new));
  std::vector<Tope> unique_topes = topes;
  std::sort(unique_topes.begin(), unique_topes.end());
  unique_topes.erase(std::unique(unique_topes.begin(), unique_topes.end()), unique_topes.end());
  std::unordered_map<Tope, int> idx;
  for (size_t i = 0; i < unique_topes.size(); ++i) idx[unique_topes[i]] = int(i);

  std::vector<GraphEdge> edges;
  for (const auto& e : g.edges()) {
    if (drop.count(e.type)) continue; // contracted away
    int a = idx[topes[e.a]], b = idx[topes[e.b]];
    edges.push_back({a, b, old_to_new[e.type]});
  }
  return TopeGraph(next, std::move(unique_topes), std::move(edges));
}

TopeGraph box_product(const TopeGraph& g1, const TopeGraph& g2) {
  std::vector<Tope> topes;
  topes.reserve(size_t(g1.tope_count()) * g2.tope_count());
  for (const auto& a : g1.topes())
    for (const auto& b : g2.topes()) topes.push_back(a + b);
  auto id = [&](int i, int j) { return i * g2.tope_count() + j; };
  std::vector<GraphEdge> edges;
  for (const auto& e : g1.edges())
    for (int j = 0; j < g2.tope_count(); ++j) edges.push_back({id(e.a, j), id(e.b, j), e.type});
  for (const auto& e : g2.edges())
    for (int i = 0; i < g1.tope_count(); ++i)
      edges.push_back({id(i, e.a), id(i, e.b), g1.m() + e.type});
  return TopeGraph(g1.m() + g2.m(), std::move(topes), std::move(edges));
}

std::string write_tope_graph(const TopeGraph& g) {
  std::ostringstream out;
  out << "topes " << g.tope_count() << " edges " << g.edge_count() << " m " << g.m() << "\n";
  for (const auto& t : g.topes()) out << t << "\n";
  for (const auto& e : g.edges()) out << e.a << " " << e.b << " " << e.type << "\n";
  return out.str();
}

TopeGraph parse_tope_graph(const std::string& text) {
  std::istringstream in(text);
  std::string kw_topes, kw_edges, kw_m;
  long long nt = 0, ne = 0, m = 0;
  if (!(in >> kw_topes >> nt >> kw_edges >> ne >> kw_m >> m) || kw_topes != "topes" ||
      kw_edges != "edges" || kw_m != "m")
    fail(Errc::ParseError, "bad tope-graph header");
  std::vector<Tope> topes;
  for (long long i = 0; i < nt; ++i) {
    Tope t;
    if (!(in >> t)) fail(Errc::ParseError, "missing tope line " + std::to_string(i));
    topes.push_back(t);
  }
  std::vector<GraphEdge> edges;
  for (long long i = 0; i < ne; ++i) {
    GraphEdge e;
    if (!(in >> e.a >> e.b >> e.type)) fail(Errc::ParseError, "missing edge line " + std::to_string(i));
    edges.push_back(e);
  }
  return TopeGraph(int(m), std::move(topes), std::move(edges));
}

} // namespace topecycle
