#include "topecycle/lp.hpp"

#include <cassert>

namespace topecycle {

std::optional<Vec> strict_feasible(const Mat& constraints, int n) {
  const int m = int(constraints.size());
  if (m == 0) return Vec(n, Scalar(0));
  for (const auto& row : constraints) {
    if (int(row.size()) != n) fail(Errc::LengthMismatch, "constraint row of wrong length");
  }

  // Variables: u_0..u_{n-1}, v_0..v_{n-1} (x = u - v), t, s_0..s_{m-1}, s'.
  const int iu = 0, iv = n, it = 2 * n, is = 2 * n + 1, isp = 2 * n + 1 + m;
  const int nvars = isp + 1;

  // Row i < m:  -A_i u + A_i v + t + s_i = 0   (so basis column is +1)
  // Row m:      t + s' = 1
  Mat tab(m + 1, Vec(nvars + 1, Scalar(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      tab[i][iu + j] = -constraints[i][j];
      tab[i][iv + j] = constraints[i][j];
    }
    tab[i][it] = Scalar(1);
    tab[i][is + i] = Scalar(1);
  }
  tab[m][it] = Scalar(1);
  tab[m][isp] = Scalar(1);
  tab[m][nvars] = Scalar(1);

  std::vector<int> basis(m + 1);
  for (int i = 0; i < m; ++i) basis[i] = is + i;
  basis[m] = isp;

  // Objective: maximize t.  objective row holds -c after eliminating basis
  // columns (all initial basic variables have zero cost).
  Vec obj(nvars + 1, Scalar(0));
  obj[it] = Scalar(-1);

  while (true) {
    int enter = -1;
    for (int j = 0; j < nvars; ++j) {
      if (obj[j].sign() < 0) { // Bland: first improving column
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Scalar best_ratio;
    for (int r = 0; r <= m; ++r) {
      if (tab[r][enter].sign() <= 0) continue;
      Scalar ratio = tab[r][nvars] / tab[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // The objective is bounded by t <= 1, so a pivot row always exists.
    assert(leave >= 0);
    Scalar inv = Scalar(1) / tab[leave][enter];
    for (int c = 0; c <= nvars; ++c) tab[leave][c] = tab[leave][c] * inv;
    for (int r = 0; r <= m; ++r) {
      if (r == leave || tab[r][enter].is_zero()) continue;
      Scalar f = tab[r][enter];
      for (int c = 0; c <= nvars; ++c) tab[r][c] = tab[r][c] - f * tab[leave][c];
    }
    if (!obj[enter].is_zero()) {
      Scalar f = obj[enter];
      for (int c = 0; c <= nvars; ++c) obj[c] = obj[c] - f * tab[leave][c];
    }
    basis[leave] = enter;
  }

  Scalar t_opt = obj[nvars]; // objective value after eliminations
  assert(t_opt.sign() >= 0);
  if (t_opt != Scalar(1)) {
    assert(t_opt.is_zero()); // scaling argument: optimum is exactly 0 or 1
    return std::nullopt;
  }

  Vec x(n, Scalar(0));
  for (int r = 0; r <= m; ++r) {
    int v = basis[r];
    if (v >= iu && v < iu + n) x[v - iu] += tab[r][nvars];
    if (v >= iv && v < iv + n) x[v - iv] -= tab[r][nvars];
  }
  for (int i = 0; i < m; ++i) {
    if (dot(constraints[i], x) < Scalar(1))
      fail(Errc::InvalidInput, "internal: simplex produced an invalid witness");
  }
  return x;
}

} // namespace topecycle
