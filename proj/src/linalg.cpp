#include "topecycle/linalg.hpp"

#include <cassert>

namespace topecycle {

Scalar dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Scalar s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& v, const Scalar& c) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

Rref rref(Mat m) {
  Rref out;
  if (m.empty()) return out;
  size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Scalar inv = Scalar(1) / m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
    }
    out.pivot_cols.push_back(int(col));
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

int rank(const Mat& m) { return rref(m).rank(); }

std::string row_space_key(const Mat& m) {
  Rref r = rref(m);
  std::string key;
  for (const auto& row : r.rows) {
    for (const auto& x : row) {
      key += x.str();
      key += ' ';
    }
    key += ';';
  }
  return key;
}

bool in_row_space(const Rref& r, const Vec& v) {
  Vec w = v;
  for (size_t i = 0; i < r.rows.size(); ++i) {
    int p = r.pivot_cols[i];
    if (!w[p].is_zero()) {
      Scalar f = w[p];
      for (size_t c = 0; c < w.size(); ++c) w[c] = w[c] - f * r.rows[i][c];
    }
  }
  return is_zero_vec(w);
}

Mat nullspace(const Mat& m, int n) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivot_cols) is_pivot[p] = true;
  Mat basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, Scalar(0));
    v[free] = Scalar(1);
    for (size_t i = 0; i < r.rows.size(); ++i) v[r.pivot_cols[i]] = -r.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> solve_columns(const Mat& a, const Mat& b_cols) {
  size_t n = a.size();
  assert(n > 0 && a[0].size() == n);
  size_t k = b_cols.size();
  // augmented rows [A | B]
  Mat aug(n, Vec(n + k, Scalar(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    for (size_t j = 0; j < k; ++j) aug[i][n + j] = b_cols[j][i];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && aug[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[col], aug[piv]);
    Scalar inv = Scalar(1) / aug[col][col];
    for (size_t c = col; c < n + k; ++c) aug[col][c] = aug[col][c] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      Scalar f = aug[r][col];
      for (size_t c = col; c < n + k; ++c) aug[r][c] = aug[r][c] - f * aug[col][c];
    }
  }
  Mat x_cols(k, Vec(n));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) x_cols[j][i] = aug[i][n + j];
  return x_cols;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  auto cols = solve_columns(a, Mat{b});
  if (!cols) return std::nullopt;
  return (*cols)[0];
}

std::optional<Vec> express_in_span(const Mat& vectors, const Vec& target) {
  size_t k = vectors.size(), n = target.size();
  // rows of the elimination are the n coordinate equations, k + 1 columns
  Mat aug(n, Vec(k + 1, Scalar(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = vectors[j][i];
    aug[i][k] = target[i];
  }
  Rref r = rref(std::move(aug));
  Vec c(k, Scalar(0));
  for (size_t i = 0; i < r.rows.size(); ++i) {
    if (r.pivot_cols[i] == int(k)) return std::nullopt; // inconsistent
    c[r.pivot_cols[i]] = r.rows[i][k];
  }
  // verify (also catches dependent inputs, where the solution is not unique)
  Vec check(n, Scalar(0));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) check[i] += c[j] * vectors[j][i];
  if (check != target) return std::nullopt;
  return c;
}

Vec canonicalize_direction(Vec v) {
  Rat content;
  int first_sign = 0;
  for (const auto& x : v) {
    content = Rat::content_gcd(content, x.rational_part());
    content = Rat::content_gcd(content, x.sqrt_coeff());
    if (first_sign == 0) first_sign = x.sign();
  }
  if (first_sign == 0) return v; // zero vector
  Scalar f = Scalar(content.reciprocal());
  if (first_sign < 0) f = -f;
  for (auto& x : v) x = x * f;
  return v;
}

bool proportional(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  return canonicalize_direction(a) == canonicalize_direction(b);
}

std::string vec_str(const Vec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].str();
  }
  return s;
}

} // namespace topecycle
