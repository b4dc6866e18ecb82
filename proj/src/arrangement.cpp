#include "topecycle/arrangement.hpp"

#include <algorithm>
#include <map>

namespace topecycle {

namespace {

bool vec_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = a[i].cmp(b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

} // namespace

Arrangement::Arrangement(int dim, long long field_d, std::vector<Vec> normals)
    : dim_(dim), field_d_(field_d) {
  if (dim <= 0) fail(Errc::InvalidInput, "dimension must be positive");
  if (normals.empty()) fail(Errc::InvalidInput, "arrangement must be non-empty");
  if (field_d != 0 && (field_d < 2 || !Scalar::is_square_free(field_d)))
    fail(Errc::UnsupportedField, "field d must be 0 (rational) or square-free >= 2");
  std::map<std::string, int> seen;
  for (auto& n : normals) {
    if (int(n.size()) != dim) fail(Errc::InvalidInput, "normal has wrong length");
    for (const auto& e : n) {
      if (!e.is_rational() && e.field_d() != field_d)
        fail(Errc::FieldMismatch, "coefficient outside the declared field");
    }
    Vec canon = canonicalize_direction(std::move(n));
    if (is_zero_vec(canon)) fail(Errc::InvalidInput, "zero normal");
    std::string key = vec_str(canon);
    if (!seen.emplace(key, int(hyps_.size())).second)
      fail(Errc::DuplicateHyperplane, "proportional normals: " + key);
    hyps_.push_back(Hyperplane{std::move(canon)});
  }
  Mat m;
  for (const auto& h : hyps_) m.push_back(h.normal);
  rank_ = topecycle::rank(m);
}

int Arrangement::find(const Vec& v) const {
  Vec canon = canonicalize_direction(v);
  for (size_t i = 0; i < hyps_.size(); ++i)
    if (hyps_[i].normal == canon) return int(i);
  return -1;
}

Arrangement Arrangement::canonically_sorted() const {
  std::vector<Vec> normals;
  for (const auto& h : hyps_) normals.push_back(h.normal);
  std::sort(normals.begin(), normals.end(), vec_less);
  return Arrangement(dim_, field_d_, std::move(normals));
}

bool Arrangement::same_hyperplanes(const Arrangement& o) const {
  if (dim_ != o.dim_ || hyps_.size() != o.hyps_.size()) return false;
  std::vector<std::string> a, b;
  for (const auto& h : hyps_) a.push_back(vec_str(h.normal));
  for (const auto& h : o.hyps_) b.push_back(vec_str(h.normal));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Deletion delete_hyperplanes(const Arrangement& a, const std::set<int>& drop) {
  for (int i : drop)
    if (i < 0 || i >= a.size()) fail(Errc::InvalidInput, "drop index out of range");
  if (int(drop.size()) >= a.size())
    fail(Errc::DropAll, "deletion would remove every hyperplane");
  std::vector<Vec> normals;
  std::vector<int> old_to_new(a.size(), -1), new_to_old;
  for (int i = 0; i < a.size(); ++i) {
    if (drop.count(i)) continue;
    old_to_new[i] = int(normals.size());
    new_to_old.push_back(i);
    normals.push_back(a.hyperplane(i).normal);
  }
  return Deletion{Arrangement(a.dim(), a.field_d(), std::move(normals)),
                  std::move(old_to_new), std::move(new_to_old)};
}

Arrangement restrict_to(const Arrangement& a, int h) {
  if (a.size() < 2) fail(Errc::InvalidInput, "restriction needs >= 2 hyperplanes");
  if (h < 0 || h >= a.size()) fail(Errc::InvalidInput, "restriction index out of range");
  Mat basis = nullspace(Mat{a.hyperplane(h).normal}, a.dim()); // dim-1 vectors
  std::vector<Vec> normals;
  std::vector<std::string> seen;
  for (int i = 0; i < a.size(); ++i) {
    if (i == h) continue;
    Vec induced(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) induced[j] = dot(a.hyperplane(i).normal, basis[j]);
    if (is_zero_vec(induced)) continue; // proportional to H_h; cannot happen after dedup
    Vec canon = canonicalize_direction(std::move(induced));
    std::string key = vec_str(canon);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    normals.push_back(std::move(canon));
  }
  return Arrangement(a.dim() - 1, a.field_d(), std::move(normals));
}

Arrangement product(const Arrangement& a, const Arrangement& b) {
  long long d = 0;
  if (a.field_d() == 0) {
    d = b.field_d();
  } else if (b.field_d() == 0 || a.field_d() == b.field_d()) {
    d = a.field_d();
  } else {
    fail(Errc::FieldMismatch, "product of arrangements over different quadratic fields");
  }
  int n = a.dim() + b.dim();
  std::vector<Vec> normals;
  for (const auto& h : a.hyperplanes()) {
    Vec v(n, Scalar(0));
    for (int i = 0; i < a.dim(); ++i) v[i] = h.normal[i];
    normals.push_back(std::move(v));
  }
  for (const auto& h : b.hyperplanes()) {
    Vec v(n, Scalar(0));
    for (int i = 0; i < b.dim(); ++i) v[a.dim() + i] = h.normal[i];
    normals.push_back(std::move(v));
  }
  return Arrangement(n, d, std::move(normals));
}

Essentialization essentialize(const Arrangement& a) {
  Mat m;
  for (const auto& h : a.hyperplanes()) m.push_back(h.normal);
  Rref r = rref(m);
  Essentialization e;
  e.rank = r.rank();
  e.basis = r.rows;
  for (const auto& h : a.hyperplanes()) {
    Vec v(e.rank);
    for (int i = 0; i < e.rank; ++i) v[i] = dot(e.basis[i], h.normal);
    e.normals.push_back(std::move(v));
  }
  return e;
}

} // namespace topecycle
