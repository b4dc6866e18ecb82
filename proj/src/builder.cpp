#include "topecycle/builder.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "topecycle/lp.hpp"

namespace topecycle {

namespace {

// Deterministic direction source for the generic-direction optimization.
struct DirectionRng {
  std::uint64_t state;
  explicit DirectionRng(std::uint64_t seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  Vec direction(int n) {
    Vec f(n);
    for (int i = 0; i < n; ++i) f[i] = Scalar((long long)(next() % 2000003) + 1);
    return f;
  }
};

} // namespace

PositiveSystem::PositiveSystem(const Arrangement& a) {
  Essentialization e = essentialize(a);
  roots_ = std::move(e.normals);
  rank_ = e.rank;
  auto w = strict_feasible(roots_, rank_);
  if (!w)
    fail(Errc::InvalidPositiveSystem, "no point is strictly positive on every root");
  witness_ = std::move(*w);
}

RegionFrame initial_region(const PositiveSystem& p, std::uint64_t seed) {
  const int r = p.rank();
  const int m = p.size();
  DirectionRng rng(seed);

  std::vector<int> wall_ids;
  Mat wall_vecs; // original essential coordinates

  // current projected images; level l lives in dimension r - l
  std::vector<std::pair<Vec, int>> cur;
  for (int i = 0; i < m; ++i) cur.push_back({p.root(i), i});

  while (!cur.empty()) {
    if (int(wall_ids.size()) == r)
      fail(Errc::NotSimplicialCone, "cone has more than rank-many extreme rays");
    int dim = int(cur[0].first.size());

    Mat vecs;
    for (auto& [v, id] : cur) vecs.push_back(v);
    auto g = strict_feasible(vecs, dim);
    if (!g) fail(Errc::NotSimplicialCone, "projected cone is not pointed");

    // normalize onto the cross-section <g, x> = 1
    Mat pts;
    for (const auto& v : vecs) pts.push_back(scale(v, Scalar(1) / dot(*g, v)));

    // optimize a generic direction over the cross-section points; the unique
    // maximizer is a vertex, i.e. an extreme ray of the cone
    int best = -1;
    for (int attempt = 0; attempt < 32; ++attempt) {
      Vec f = rng.direction(dim);
      best = 0;
      Scalar best_val = dot(f, pts[0]);
      bool tie = false;
      for (size_t i = 1; i < pts.size(); ++i) {
        Scalar val = dot(f, pts[i]);
        int c = val.cmp(best_val);
        if (c > 0) {
          best = int(i);
          best_val = val;
          tie = false;
        } else if (c == 0 && !(pts[i] == pts[best])) {
          tie = true;
        }
      }
      if (!tie) break;
      best = -1;
    }
    if (best < 0) fail(Errc::DegenerateDirection, "no generic direction found in 32 attempts");

    // all roots whose image lies on the found extreme ray
    std::vector<int> group; // indices into cur
    for (size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == pts[best]) group.push_back(int(i));

    // Identify which of them is a wall of the base region: each candidate is
    // candidate = c0 * reference + sum_t c_t * wall_t; the wall is the one
    // whose offsets (c_t / c0) are componentwise minimal.
    int wall_pos = group[0];
    if (group.size() > 1) {
      Mat span = wall_vecs;
      span.push_back(p.root(cur[group[0]].second));
      std::vector<Vec> offsets;
      for (int gi : group) {
        auto c = express_in_span(span, p.root(cur[gi].second));
        if (!c) fail(Errc::NotSimplicialCone, "root outside the expected ray fiber");
        const Scalar& c0 = c->back();
        if (c0.sign() <= 0) fail(Errc::NotSimplicialCone, "ray fiber with nonpositive scale");
        Vec s(wall_vecs.size());
        for (size_t t = 0; t < wall_vecs.size(); ++t) s[t] = (*c)[t] / c0;
        offsets.push_back(std::move(s));
      }
      size_t best_off = 0;
      for (size_t i = 1; i < offsets.size(); ++i) {
        bool less = false;
        for (size_t t = 0; t < offsets[i].size(); ++t) {
          int cc = offsets[i][t].cmp(offsets[best_off][t]);
          if (cc != 0) {
            less = cc < 0;
            break;
          }
        }
        if (less) best_off = i;
      }
      for (size_t i = 0; i < offsets.size(); ++i) {
        for (size_t t = 0; t < offsets[i].size(); ++t) {
          if (offsets[i][t] < offsets[best_off][t])
            fail(Errc::NotSimplicialCone, "no componentwise-minimal root on a ray");
        }
      }
      wall_pos = group[best_off];
    }

    wall_ids.push_back(cur[wall_pos].second);
    wall_vecs.push_back(p.root(cur[wall_pos].second));

    // project the remaining vectors along the found ray and drop one
    // coordinate: the cone continues in one dimension less
    const Vec ray = cur[wall_pos].first;
    int piv = 0;
    while (ray[piv].is_zero()) ++piv;
    std::vector<std::pair<Vec, int>> next;
    for (auto& [v, id] : cur) {
      Scalar f = v[piv] / ray[piv];
      Vec w;
      w.reserve(dim - 1);
      for (int c = 0; c < dim; ++c) {
        if (c == piv) continue;
        w.push_back(v[c] - f * ray[c]);
      }
      if (!is_zero_vec(w)) next.push_back({std::move(w), id});
    }
    cur = std::move(next);
  }

  if (int(wall_ids.size()) != r)
    fail(Errc::NotSimplicialCone, "found fewer extreme rays than the rank");

  // sort wall slots by root index for a reproducible initial frame
  std::vector<int> order(r);
  for (int i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return wall_ids[a] < wall_ids[b]; });
  std::vector<int> walls(r);
  Mat wcols(r);
  for (int i = 0; i < r; ++i) {
    walls[i] = wall_ids[order[i]];
    wcols[i] = wall_vecs[order[i]];
  }

  // expand every root in the wall basis: solve W c = root
  Mat w_rows(r, Vec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) w_rows[i][j] = wcols[j][i];
  auto coeffs = solve_columns(w_rows, p.roots());
  if (!coeffs) fail(Errc::NotSimplicialCone, "wall roots are linearly dependent");

  RegionFrame frame;
  frame.tope = p.base_tope();
  frame.walls = walls;
  frame.table = std::move(*coeffs);
  for (int h = 0; h < m; ++h) {
    for (int c = 0; c < r; ++c) {
      if (frame.table[h][c].sign() < 0)
        fail(Errc::NotSimplicialCone, "root with a negative wall coefficient");
    }
  }
  return frame;
}

std::optional<ClosestRoot> closest_root(const RegionFrame& f, int i, int j) {
  if (i == j) fail(Errc::InvalidInput, "closest_root needs two distinct wall slots");
  const int r = f.rank();
  std::optional<ClosestRoot> best;
  for (int h = 0; h < f.size(); ++h) {
    const Vec& row = f.table[h];
    if (row[i].sign() <= 0 || row[j].sign() <= 0) continue;
    bool supported = true;
    for (int c = 0; c < r && supported; ++c)
      if (c != i && c != j && !row[c].is_zero()) supported = false;
    if (!supported) continue;
    Scalar q = row[i] / row[j];
    if (!best) {
      best = ClosestRoot{h, q, row[j]};
    } else {
      int c = q.cmp(best->q);
      if (c == 0)
        fail(Errc::TieDetected, "two roots with equal quotient: duplicate hyperplane in input");
      if (c > 0) best = ClosestRoot{h, q, row[j]};
    }
  }
  return best;
}

RegionFrame cross_wall(const RegionFrame& f, int i) {
  const int r = f.rank();
  const int m = f.size();
  if (i < 0 || i >= r) fail(Errc::InvalidInput, "wall slot out of range");
  const int sep = f.walls[i];

  RegionFrame nf = f;
  nf.tope = flipped(f.tope, sep);

  std::vector<std::optional<ClosestRoot>> found(r);
  for (int j = 0; j < r; ++j) {
    if (j == i) continue;
    found[j] = closest_root(f, i, j);
    if (found[j]) nf.walls[j] = found[j]->root;
  }

  // rebase: negate the separating column except on the separating root,
  // then fold each found pair back in
  for (int h = 0; h < m; ++h) {
    if (h == sep) continue;
    nf.table[h][i] = -nf.table[h][i];
  }
  for (int j = 0; j < r; ++j) {
    if (!found[j]) continue;
    const Scalar& q = found[j]->q;
    const Scalar& d = found[j]->d;
    for (int h = 0; h < m; ++h) nf.table[h][i] += q * nf.table[h][j];
    for (int h = 0; h < m; ++h) nf.table[h][j] /= d;
  }

  // simpliciality invariant: nonnegative entries, unit rows exactly at walls
  for (int h = 0; h < m; ++h) {
    int unit_at = -1;
    bool unit = true;
    for (int c = 0; c < r; ++c) {
      int s = nf.table[h][c].sign();
      if (s < 0)
        fail(Errc::NotSimplicial, "negative expansion entry after wall crossing");
      if (s != 0) {
        if (unit_at >= 0 || !nf.table[h][c].is_one())
          unit = false;
        else
          unit_at = c;
      }
    }
    bool is_wall = false;
    for (int c = 0; c < r; ++c) is_wall |= (nf.walls[c] == h);
    if (is_wall != (unit && unit_at >= 0 && nf.walls[unit_at] == h))
      fail(Errc::NotSimplicial, "wall rows are not exactly the unit rows");
  }
  return nf;
}

namespace {

#ifndef NDEBUG
// Canonical form for tope-level frame comparison: wall slots sorted by root
// index with table columns permuted accordingly.
std::string canonical_frame_key(const RegionFrame& f) {
  std::vector<int> order(f.rank());
  for (int i = 0; i < f.rank(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return f.walls[a] < f.walls[b]; });
  std::string key;
  for (int i : order) key += std::to_string(f.walls[i]) + ",";
  key += "|";
  for (int h = 0; h < f.size(); ++h) {
    for (int i : order) key += f.table[h][i].str() + " ";
    key += ";";
  }
  return key;
}
#endif

} // namespace

TopeGraph build_tope_graph(const PositiveSystem& p, const BuildOptions& opt) {
  const int r = p.rank();
  RegionFrame base = initial_region(p, opt.seed);

  std::vector<Tope> topes;
  std::unordered_map<Tope, int> index;
  std::set<std::pair<int, int>> edge_set;
  std::vector<GraphEdge> edges;
#ifndef NDEBUG
  std::unordered_map<Tope, std::string> frame_keys;
  frame_keys[base.tope] = canonical_frame_key(base);
#endif

  topes.push_back(base.tope);
  index[base.tope] = 0;

  // Stack entries carry the region and the wall slots still to check, in
  // slot order; popping removes the last pending slot first.
  struct Entry {
    RegionFrame frame;
    std::vector<int> pending;
  };
  std::vector<Entry> stack;
  {
    std::vector<int> pend(r);
    for (int i = 0; i < r; ++i) pend[i] = r - 1 - i; // back() is slot 0
    stack.push_back({std::move(base), std::move(pend)});
  }

  while (!stack.empty()) {
    Entry e = std::move(stack.back());
    stack.pop_back();
    int slot = e.pending.back();
    e.pending.pop_back();
    RegionFrame const* cur = &e.frame;
    int cur_id = index.at(cur->tope);
    RegionFrame nb = cross_wall(*cur, slot);
    int sep = cur->walls[slot];
    if (!e.pending.empty()) stack.push_back(std::move(e)); // one wall less

    auto it = index.find(nb.tope);
    if (it == index.end()) {
      if ((long long)topes.size() >= opt.max_topes)
        fail(Errc::SizeLimit, "tope limit exceeded: " + std::to_string(opt.max_topes));
      int id = int(topes.size());
      topes.push_back(nb.tope);
      index[nb.tope] = id;
      edge_set.insert({std::min(cur_id, id), std::max(cur_id, id)});
      edges.push_back({cur_id, id, sep});
#ifndef NDEBUG
      frame_keys[nb.tope] = canonical_frame_key(nb);
#endif
      std::vector<int> pend;
      for (int i = r - 1; i >= 0; --i)
        if (i != slot) pend.push_back(i); // all walls except the entering one
      if (!pend.empty()) stack.push_back({std::move(nb), std::move(pend)});
    } else {
#ifndef NDEBUG
      // a region reached twice must present the same frame up to slot order
      assert(frame_keys.at(nb.tope) == canonical_frame_key(nb));
#endif
      auto key = std::make_pair(std::min(cur_id, it->second), std::max(cur_id, it->second));
      if (edge_set.insert(key).second) edges.push_back({cur_id, it->second, sep});
    }
  }

  return TopeGraph(p.size(), std::move(topes), std::move(edges));
}

TopeGraph build_tope_graph(const Arrangement& a, const BuildOptions& opt) {
  return build_tope_graph(PositiveSystem(a), opt);
}

} // namespace topecycle
