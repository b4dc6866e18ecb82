#include "topecycle/oracle.hpp"

#include <unordered_map>

#include "topecycle/lp.hpp"

namespace topecycle {

namespace {

struct Region {
  Tope signs;
  Vec witness; // interior point, strict on every inserted hyperplane
};

Scalar abs_scalar(const Scalar& s) { return s.sign() < 0 ? -s : s; }

} // namespace

TopeGraph oracle_enumerate(const Arrangement& a, long long max_topes) {
  Essentialization e = essentialize(a);
  const Mat& n = e.normals;
  const int m = a.size();
  const int r = e.rank;

  // first hyperplane: both sides, witnesses +-n0 / <n0, n0>
  std::vector<Region> regions;
  {
    Vec w = scale(n[0], Scalar(1) / dot(n[0], n[0]));
    regions.push_back({"+", w});
    regions.push_back({"-", scale(w, Scalar(-1))});
  }

  for (int k = 1; k < m; ++k) {
    std::vector<Region> next;
    for (auto& reg : regions) {
      Scalar val = dot(n[k], reg.witness);
      int sgn = val.sign();
      if (sgn == 0) {
        // witness on the new hyperplane: both sides are nonempty; nudge it
        // exactly along n_k, small enough to keep every earlier sign
        Scalar eps; // min over i of |<n_i, w>| / (2 (|<n_i, n_k>| + 1))
        bool first = true;
        for (int i = 0; i < k; ++i) {
          Scalar step = abs_scalar(dot(n[i], reg.witness)) /
                        ((abs_scalar(dot(n[i], n[k])) + Scalar(1)) * Scalar(2));
          if (first || step < eps) {
            eps = step;
            first = false;
          }
        }
        if (first) eps = Scalar(1);
        next.push_back({reg.signs + '+', add(reg.witness, scale(n[k], eps))});
        next.push_back({reg.signs + '-', sub(reg.witness, scale(n[k], eps))});
        continue;
      }
      char side = sgn > 0 ? '+' : '-';
      next.push_back({reg.signs + side, reg.witness});
      // the opposite side exists iff the strict system is feasible
      Mat cons;
      for (int i = 0; i < k; ++i)
        cons.push_back(reg.signs[i] == '+' ? n[i] : scale(n[i], Scalar(-1)));
      cons.push_back(sgn > 0 ? scale(n[k], Scalar(-1)) : n[k]);
      if (auto y = strict_feasible(cons, r)) {
        next.push_back({reg.signs + (side == '+' ? '-' : '+'), std::move(*y)});
      }
    }
    regions = std::move(next);
    if ((long long)regions.size() > max_topes)
      fail(Errc::SizeLimit, "oracle tope limit exceeded");
  }

  std::vector<Tope> topes;
  std::unordered_map<Tope, int> index;
  for (const auto& reg : regions) {
    index[reg.signs] = int(topes.size());
    topes.push_back(reg.signs);
  }

  // nullspace bases of each hyperplane, computed on demand
  std::vector<Mat> inside(m);
  std::vector<bool> have(m, false);

  std::vector<GraphEdge> edges;
  for (int id = 0; id < int(topes.size()); ++id) {
    const Tope& t = topes[id];
    for (int h = 0; h < m; ++h) {
      Tope u = flipped(t, h);
      auto it = index.find(u);
      if (it == index.end() || it->second < id) continue;
      // shared facet: a point on H_h strictly inside all other constraints
      if (!have[h]) {
        inside[h] = nullspace(Mat{n[h]}, r);
        have[h] = true;
      }
      const Mat& basis = inside[h];
      Mat cons;
      for (int i = 0; i < m; ++i) {
        if (i == h) continue;
        Vec row(basis.size());
        for (size_t j = 0; j < basis.size(); ++j) row[j] = dot(n[i], basis[j]);
        if (t[i] == '-') row = scale(row, Scalar(-1));
        cons.push_back(std::move(row));
      }
      if (strict_feasible(cons, int(basis.size())))
        edges.push_back({id, it->second, h});
    }
  }

  return TopeGraph(m, std::move(topes), std::move(edges));
}

} // namespace topecycle
