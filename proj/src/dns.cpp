#include "topecycle/dns.hpp"

#include <algorithm>
#include <map>

#include "topecycle/catalogue.hpp"

namespace topecycle {

namespace {

// Signed-permutation class of T(D_{n,s}): all regions (sigma, delta) with
// sigma(n) = j; for j > s the two delta-lifts are contracted, so the
// canonical key forces delta(j) = +1.
struct ClassKey {
  int j;                  // 1-based innermost value
  std::vector<int> delta; // +-1 per element, delta[j-1] = +1 when j > s
  bool operator<(const ClassKey& o) const {
    if (j != o.j) return j < o.j;
    return delta < o.delta;
  }
  bool operator==(const ClassKey& o) const = default;
};

struct DnsBuilder {
  int n, s;
  Arrangement arr;
  TopeGraph graph;
  std::vector<std::vector<long long>> normals; // integer copies for fast signs

  std::vector<std::vector<int>> patterns;      // common cycle on S_{n-1}
  std::map<std::vector<int>, int> pattern_id;
  std::map<std::pair<int, int>, int> cycle_edge; // unordered pattern-id pair -> position

  std::vector<ClassKey> classes;
  std::map<ClassKey, int> class_id;
  // embedded tope per (class, cycle position)
  std::vector<std::vector<Tope>> class_topes;

  DnsBuilder(int nn, int ss, const BuildOptions& opt)
      : n(nn), s(ss), arr(generate({Family::Dns, nn, ss})), graph(build_tope_graph(arr, opt)) {
    for (const auto& h : arr.hyperplanes()) {
      std::vector<long long> row;
      for (const auto& c : h.normal) {
        if (!c.rational_part().fits_small_int(4) || !c.sqrt_coeff().is_zero())
          fail(Errc::InvalidInput, "unexpected D_{n,s} normal");
        row.push_back(c.rational_part().small_int());
      }
      normals.push_back(std::move(row));
    }
  }

  // --- the common A_{n-2} Hamiltonian cycle, as permutations of [n-1] ---

  void build_common_cycle() {
    Arrangement a = generate({Family::A, n - 1});
    HamiltonCertificate cert = supersolvable_cycle(a);
    // index of H_{e_i - e_j} for the sign-to-order conversion
    std::vector<std::vector<int>> idx(n - 1, std::vector<int>(n - 1, -1));
    for (int i = 0; i < n - 1; ++i) {
      for (int j = i + 1; j < n - 1; ++j) {
        Vec v(n - 1, Scalar(0));
        v[i] = Scalar(1);
        v[j] = Scalar(-1);
        idx[i][j] = a.find(v);
      }
    }
    for (const Tope& t : certificate_topes(cert)) {
      // wins[i] = number of j with x_{i+1} > x_{j+1}
      std::vector<int> wins(n - 1, 0);
      for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n - 1; ++j) {
          bool i_gt_j = (t[idx[i][j]] == '+');
          (i_gt_j ? wins[i] : wins[j])++;
        }
      }
      std::vector<int> perm(n - 1);
      for (int i = 0; i < n - 1; ++i) perm[(n - 2) - wins[i]] = i + 1;
      pattern_id[perm] = int(patterns.size());
      patterns.push_back(std::move(perm));
    }
    const int L = int(patterns.size());
    for (int t = 0; t < L; ++t) {
      int a1 = t, b1 = (t + 1) % L;
      cycle_edge[{std::min(a1, b1), std::max(a1, b1)}] = t;
    }
  }

  // --- class enumeration and embedded topes ---

  static int relabel(int v, int j) { return v < j ? v : v + 1; }   // [n-1] -> [n] minus j
  static int relabel_inv(int v, int j) { return v < j ? v : v - 1; }

  Tope tope_of(const std::vector<int>& sigma, const std::vector<int>& delta) const {
    std::vector<long long> x(n);
    for (int i = 0; i < n; ++i) {
      int k = sigma[i];
      x[k - 1] = (long long)delta[k - 1] * (n - i);
    }
    Tope t(arr.size(), '?');
    for (int h = 0; h < arr.size(); ++h) {
      long long val = 0;
      for (int c = 0; c < n; ++c) val += normals[h][c] * x[c];
      t[h] = val > 0 ? '+' : '-';
    }
    return t;
  }

  void build_classes() {
    const int L = int(patterns.size());
    for (int j = 1; j <= n; ++j) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> delta(n);
        for (int k = 0; k < n; ++k) delta[k] = (mask >> k) & 1 ? -1 : 1;
        if (j > s && delta[j - 1] != 1) continue; // canonical lift
        ClassKey key{j, delta};
        class_id[key] = int(classes.size());
        classes.push_back(key);
        std::vector<Tope> topes(L);
        std::vector<int> sigma(n);
        for (int t = 0; t < L; ++t) {
          for (int i = 0; i < n - 1; ++i) sigma[i] = relabel(patterns[t][i], j);
          sigma[n - 1] = j;
          topes[t] = tope_of(sigma, delta);
        }
        class_topes.push_back(std::move(topes));
      }
    }
  }

  ClassKey canonical(int j, std::vector<int> delta) const {
    if (j > s) delta[j - 1] = 1;
    return ClassKey{j, std::move(delta)};
  }

  // --- quadrilateral candidates ---

  struct Quad {
    Quadrilateral q;
    int pos1, pos2; // cycle positions of e1 (in the parent) and e2 (child)
  };

  // delta-flip pair across H_{e_j}, j <= s: any common-cycle edge lifts
  std::vector<Quad> type_a_candidates(const ClassKey& p, const ClassKey& c) const {
    const int L = int(patterns.size());
    int pi = class_id.at(p), ci = class_id.at(c);
    std::vector<Quad> out;
    for (int t = 0; t < L; ++t) {
      int u = (t + 1) % L;
      Quad q;
      q.q.e1 = {class_topes[pi][t], class_topes[pi][u]};
      q.q.e2 = {class_topes[ci][t], class_topes[ci][u]};
      q.q.f1 = {class_topes[pi][t], class_topes[ci][t]};
      q.q.f2 = {class_topes[pi][u], class_topes[ci][u]};
      q.pos1 = t;
      q.pos2 = t;
      out.push_back(std::move(q));
    }
    return out;
  }

  // same-delta pair between columns j and k: a cycle edge whose lifts keep
  // sigma(n-1) = k and whose across-neighbors are again a cycle edge.
  // lift_delta is the concrete delta realizing the adjacency; the embedded
  // topes of both classes are independent of their own contracted sign, so
  // the canonical tables apply.
  std::vector<Quad> type_b_candidates(int j, int k_col, const std::vector<int>& lift_delta) const {
    const int L = int(patterns.size());
    int pi = class_id.at(canonical(j, lift_delta));
    int ci = class_id.at(canonical(k_col, lift_delta));
    std::vector<Quad> out;
    for (int t = 0; t < L; ++t) {
      int u = (t + 1) % L;
      // lifted sigma(n-1) = relabel(pattern last entry, j) must equal k
      if (relabel(patterns[t][n - 2], j) != k_col) continue;
      if (relabel(patterns[u][n - 2], j) != k_col) continue;
      // across neighbors: swap positions n-1 and n, land in column k
      auto across = [&](int pos) {
        std::vector<int> rho(n - 1);
        for (int i = 0; i < n - 2; ++i) rho[i] = relabel_inv(relabel(patterns[pos][i], j), k_col);
        rho[n - 2] = relabel_inv(j, k_col);
        return rho;
      };
      auto it_t = pattern_id.find(across(t));
      auto it_u = pattern_id.find(across(u));
      if (it_t == pattern_id.end() || it_u == pattern_id.end()) continue;
      auto eit = cycle_edge.find({std::min(it_t->second, it_u->second),
                                  std::max(it_t->second, it_u->second)});
      if (eit == cycle_edge.end()) continue;
      Quad q;
      q.q.e1 = {class_topes[pi][t], class_topes[pi][u]};
      q.q.e2 = {class_topes[ci][it_t->second], class_topes[ci][it_u->second]};
      q.q.f1 = {class_topes[pi][t], class_topes[ci][it_t->second]};
      q.q.f2 = {class_topes[pi][u], class_topes[ci][it_u->second]};
      q.pos1 = t;
      q.pos2 = eit->second;
      out.push_back(std::move(q));
    }
    return out;
  }

  HamiltonCertificate run(DnsStats* stats) {
    build_common_cycle();
    build_classes();
    const int C = int(classes.size());

    // class-incidence graph
    std::vector<std::vector<std::pair<int, std::vector<int>>>> adj(C);
    // neighbor class id + the delta lift realizing the adjacency
    for (int ci = 0; ci < C; ++ci) {
      const ClassKey& key = classes[ci];
      std::vector<std::vector<int>> lifts = {key.delta};
      if (key.j > s) {
        std::vector<int> other = key.delta;
        other[key.j - 1] = -1;
        lifts.push_back(std::move(other));
      }
      if (key.j <= s) {
        std::vector<int> flipped_delta = key.delta;
        flipped_delta[key.j - 1] = -flipped_delta[key.j - 1];
        adj[ci].push_back({class_id.at(ClassKey{key.j, flipped_delta}), key.delta});
      }
      for (const auto& lift : lifts) {
        for (int k = 1; k <= n; ++k) {
          if (k == key.j) continue;
          adj[ci].push_back({class_id.at(canonical(k, lift)), lift});
        }
      }
    }

    // BFS spanning tree from the class of the all-plus tope
    ClassKey base{n, std::vector<int>(n, 1)};
    int root = class_id.at(base);
    std::vector<int> parent(C, -1);
    std::vector<std::vector<int>> parent_lift(C);
    std::vector<int> order;
    {
      std::vector<bool> seen(C, false);
      std::vector<int> queue{root};
      seen[root] = true;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        order.push_back(v);
        for (const auto& [u, lift] : adj[v]) {
          if (seen[u]) continue;
          seen[u] = true;
          parent[u] = v;
          parent_lift[u] = lift;
          queue.push_back(u);
        }
      }
      if (int(order.size()) != C)
        fail(Errc::InvalidInput, "class incidence graph is disconnected");
    }

    // reserve pairwise edge-disjoint quadrilaterals along the tree
    std::vector<std::set<int>> reserved(C); // cycle positions used per class
    struct Planned {
      int child;
      Quadrilateral q;
    };
    std::vector<Planned> plan;
    int min_pair = -1;
    for (int v : order) {
      if (v == root) continue;
      int p = parent[v];
      const ClassKey& pk = classes[p];
      const ClassKey& vk = classes[v];
      std::vector<Quad> cands;
      if (pk.j == vk.j) {
        cands = type_a_candidates(pk, vk);
      } else {
        // the BFS recorded which delta lift connects p to v
        if (canonical(pk.j, parent_lift[v]) != pk)
          fail(Errc::InvalidInput, "internal: lift does not belong to the parent class");
        cands = type_b_candidates(pk.j, vk.j, parent_lift[v]);
        int avail = int(cands.size());
        min_pair = (min_pair < 0) ? avail : std::min(min_pair, avail);
      }
      // deterministic order: smallest tope key of the quadrilateral
      std::sort(cands.begin(), cands.end(), [](const Quad& a, const Quad& b) {
        auto key = [](const Quad& q) {
          std::vector<Tope> k = {q.q.e1.first, q.q.e1.second, q.q.e2.first, q.q.e2.second};
          std::sort(k.begin(), k.end());
          return k;
        };
        return key(a) < key(b);
      });
      bool placed = false;
      for (const Quad& q : cands) {
        if (reserved[p].count(q.pos1) || reserved[v].count(q.pos2)) continue;
        reserved[p].insert(q.pos1);
        reserved[v].insert(q.pos2);
        plan.push_back({v, q.q});
        placed = true;
        break;
      }
      if (!placed)
        fail(Errc::QuadrilateralExhausted,
             "no disjoint quadrilateral between classes " + std::to_string(p) + " and " +
                 std::to_string(v));
    }

    // glue child cycles into the growing cycle in BFS order
    std::map<int, size_t> plan_of_child;
    for (size_t i = 0; i < plan.size(); ++i) plan_of_child[plan[i].child] = i;
    std::vector<Tope> root_cycle = class_topes[root];
    HamiltonCertificate big = certificate_from_cycle(root_cycle);
    for (int v : order) {
      if (v == root) continue;
      const Planned& pl = plan[plan_of_child.at(v)];
      HamiltonCertificate child = certificate_from_cycle(class_topes[v]);
      big = glue(big, child, pl.q);
    }

    if (stats) {
      stats->method = "glue";
      stats->classes = C;
      stats->tree_edges = int(plan.size());
      stats->min_pair_candidates = min_pair;
    }
    VerifyReport rep = verify_certificate(graph, big);
    if (!rep.ok())
      fail(Errc::InvalidInput,
           std::string("internal: dns gluing failed verification: ") +
               verify_status_name(rep.status) + " " + rep.detail);
    return big;
  }
};

} // namespace

HamiltonCertificate dns_cycle(int n, int s, const BuildOptions& opt, DnsStats* stats) {
  if (n < 2 || s < 0 || s > n) fail(Errc::InvalidInput, "dns_cycle needs n >= 2, 0 <= s <= n");
  if (s == n) {
    HamiltonCertificate c = supersolvable_cycle(generate({Family::B, n}), opt);
    if (stats) stats->method = "supersolvable";
    return c;
  }
  if (n >= 6) {
    DnsBuilder b(n, s, opt);
    return b.run(stats);
  }
  // small cases: supersolvable when possible, else gluing, else search
  Arrangement a = generate({Family::Dns, n, s});
  try {
    HamiltonCertificate c = supersolvable_cycle(a, opt);
    if (stats) stats->method = "supersolvable";
    return c;
  } catch (const Error& e) {
    if (e.code() != Errc::NotSupersolvable) throw;
  }
  // the gluing construction needs a genuine A_{n-2} cycle, so n >= 4
  if (n >= 4) {
    try {
      DnsBuilder b(n, s, opt);
      return b.run(stats);
    } catch (const Error& e) {
      if (e.code() != Errc::QuadrilateralExhausted) throw;
    }
  }
  TopeGraph g = build_tope_graph(a, opt);
  SearchResult res = search_cycle(g);
  if (res.status != SearchResult::Found)
    fail(Errc::InvalidInput, "search fallback failed on D_{n,s}");
  if (stats) stats->method = "search";
  return *res.certificate;
}

} // namespace topecycle
