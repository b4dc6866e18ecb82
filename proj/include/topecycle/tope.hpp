#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "topecycle/errors.hpp"

namespace topecycle {

// A tope is the sign vector of a full-dimensional region, one '+'/'-' per
// hyperplane.  The string itself is the vertex identity everywhere.
using Tope = std::string;

Tope flipped(const Tope& t, int i);
Tope negated(const Tope& t);

// The unique differing position if the Hamming distance is exactly 1.
std::optional<int> adjacency(const Tope& a, const Tope& b);

struct GraphEdge {
  int a, b;  // tope ids, a < b after canonicalization
  int type;  // hyperplane index
  bool operator<(const GraphEdge& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return type < o.type;
  }
  bool operator==(const GraphEdge& o) const = default;
};

// Graph on topes with edges labeled by the separating hyperplane.  Kept in
// canonical form (topes sorted, edges sorted with a < b), so equality of
// graphs is plain equality of the stored data.  Construction checks the
// structural conditions (lengths, edges differ exactly at their type, no
// duplicates); the stronger tope-graph invariants of arrangements are in
// check_tope_graph_invariants.
class TopeGraph {
public:
  TopeGraph(int m, std::vector<Tope> topes, std::vector<GraphEdge> edges);

  int m() const { return m_; }
  int tope_count() const { return int(topes_.size()); }
  int edge_count() const { return int(edges_.size()); }
  const std::vector<Tope>& topes() const { return topes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const Tope& tope(int id) const { return topes_[id]; }

  int index_of(const Tope& t) const; // -1 when absent
  bool has_edge(int a, int b) const;
  // (neighbor id, edge type) pairs, sorted by neighbor id.
  const std::vector<std::pair<int, int>>& neighbors(int id) const { return adj_[id]; }
  int degree(int id) const { return int(adj_[id].size()); }

  bool operator==(const TopeGraph& o) const {
    return m_ == o.m_ && topes_ == o.topes_ && edges_ == o.edges_;
  }

private:
  int m_;
  std::vector<Tope> topes_;
  std::vector<GraphEdge> edges_;
  std::unordered_map<Tope, int> index_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Central symmetry, connectivity, and (when expected_rank >= 0) degree
// regularity.  Throws InvalidInput describing the first violation.
void check_tope_graph_invariants(const TopeGraph& g, int expected_rank = -1);

// Restriction of a tope to the retained coordinates of a deletion
// (old_to_new[i] == -1 for dropped positions).
Tope project_tope(const Tope& t, const std::vector<int>& old_to_new);

// Contract every edge whose type is in drop, merge parallel edges, drop
// loops, and relabel topes by projection; equals the tope graph of the
// deleted arrangement.
TopeGraph contract_graph(const TopeGraph& g, const std::set<int>& drop);

// Box product: vertices are concatenated sign vectors, edges change one
// factor at a time.  Equals the tope graph of the product arrangement.
TopeGraph box_product(const TopeGraph& g1, const TopeGraph& g2);

std::string write_tope_graph(const TopeGraph& g);
TopeGraph parse_tope_graph(const std::string& text);

} // namespace topecycle
