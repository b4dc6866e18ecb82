#include "topecycle/catalogue.hpp"

#include <algorithm>
#include <map>

namespace topecycle {

namespace {

Vec unit(int n, int i) {
  Vec v(n, Scalar(0));
  v[i] = Scalar(1);
  return v;
}

Vec e_minus(int n, int i, int j) {
  Vec v(n, Scalar(0));
  v[i] = Scalar(1);
  v[j] = Scalar(-1);
  return v;
}

Vec e_plus(int n, int i, int j) {
  Vec v(n, Scalar(0));
  v[i] = Scalar(1);
  v[j] = Scalar(1);
  return v;
}

std::vector<Vec> dns_normals(int n, int s) {
  std::vector<Vec> normals;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      normals.push_back(e_minus(n, i, j));
      normals.push_back(e_plus(n, i, j));
    }
  for (int i = 0; i < s; ++i) normals.push_back(unit(n, i));
  return normals;
}

// Normals of the m mirror lines of a regular m-gon in oblique coordinates
// where two consecutive normals are the standard basis: the rotation
// identity gives n_{k+1} = 2cos(pi/m) n_k - n_{k-1}.
std::vector<Vec> i2m_recurrence(int m, const Scalar& two_cos) {
  std::vector<Vec> normals = {Vec{Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(1)}};
  for (int k = 2; k < m; ++k) {
    const Vec& a = normals[k - 1];
    const Vec& b = normals[k - 2];
    normals.push_back({two_cos * a[0] - b[0], two_cos * a[1] - b[1]});
  }
  return normals;
}

// Lines at angles k*pi/m with normals (-tan, 1); exact tangent tables for
// the m whose tangents live in a single quadratic field.
std::vector<Vec> i2m_tan_table(int m) {
  auto rt = [&](Rat a, Rat b, long long d) { return Scalar(std::move(a), std::move(b), d); };
  // tan(k*pi/m) for k = 1..m-1; the entry at the vertical line k = m/2 is
  // never read (that normal is emitted as (1, 0) below)
  std::vector<Scalar> tans;
  switch (m) {
    case 4:
      tans = {Scalar(1), Scalar(), Scalar(-1)};
      break;
    case 8:
      tans = {rt(Rat(-1), Rat(1), 2), Scalar(1), rt(Rat(1), Rat(1), 2), Scalar(),
              rt(Rat(-1), Rat(-1), 2), Scalar(-1), rt(Rat(1), Rat(-1), 2)};
      break;
    case 12:
      tans = {rt(Rat(2), Rat(-1), 3),  rt(Rat(0), Rat(1, 3), 3),  Scalar(1),
              rt(Rat(0), Rat(1), 3),   rt(Rat(2), Rat(1), 3),     Scalar(),
              rt(Rat(-2), Rat(-1), 3), rt(Rat(0), Rat(-1), 3),    Scalar(-1),
              rt(Rat(0), Rat(-1, 3), 3), rt(Rat(-2), Rat(1), 3)};
      break;
    default:
      fail(Errc::UnsupportedField, "no tangent table for m = " + std::to_string(m));
  }
  std::vector<Vec> normals = {Vec{Scalar(0), Scalar(1)}}; // the x-axis
  for (int k = 1; k < m; ++k) {
    if (2 * k == m) {
      normals.push_back({Scalar(1), Scalar(0)}); // vertical line
    } else {
      normals.push_back({-tans[k - 1], Scalar(1)});
    }
  }
  return normals;
}

struct MgonData {
  std::vector<Vec> vertices; // in the affine plane z = 1
  long long d;
};

// Vertices of a regular m-gon in oblique plane coordinates: v_{k+1} = S v_k
// for the companion matrix S of the rotation by 2*pi/m, which is rational
// over Q(2cos(2pi/m)).
MgonData mgon_vertices(int m) {
  Scalar c2;
  long long d = 0;
  switch (m) {
    case 3: c2 = Scalar(-1); break;
    case 4: c2 = Scalar(0); break;
    case 5: c2 = Scalar(Rat(-1, 2), Rat(1, 2), 5); d = 5; break;
    case 6: c2 = Scalar(1); break;
    case 8: c2 = Scalar(Rat(0), Rat(1), 2); d = 2; break;
    case 10: c2 = Scalar(Rat(1, 2), Rat(1, 2), 5); d = 5; break;
    case 12: c2 = Scalar(Rat(0), Rat(1), 3); d = 3; break;
    default:
      fail(Errc::UnsupportedField,
           "regular " + std::to_string(m) + "-gon needs more than one square root");
  }
  MgonData data;
  data.d = d;
  data.vertices.push_back({Scalar(1), Scalar(0)});
  data.vertices.push_back({Scalar(0), Scalar(1)});
  for (int k = 2; k < m; ++k) {
    const Vec& v = data.vertices[k - 1];
    data.vertices.push_back({-v[1], v[0] + c2 * v[1]});
  }
  return data;
}

// Cone the affine picture at z = 1: a line through p, q lifts to the plane
// through (p,1), (q,1) and the origin.
Vec cone_line(const Vec& p, const Vec& q) {
  return {p[1] - q[1], q[0] - p[0], p[0] * q[1] - p[1] * q[0]};
}

// A line through the affine origin with direction u lifts to the plane
// spanned by (u, 0) and e3.
Vec cone_axis(const Vec& u) { return {u[1], -u[0], Scalar(0)}; }

std::vector<Vec> r1_normals(int m) {
  MgonData gon = mgon_vertices(m);
  const auto& v = gon.vertices;
  std::vector<Vec> normals;
  for (int k = 0; k < m; ++k) normals.push_back(cone_line(v[k], v[(k + 1) % m]));
  if (m % 2 == 1) {
    for (int k = 0; k < m; ++k) normals.push_back(cone_axis(v[k]));
  } else {
    for (int k = 0; k < m / 2; ++k) normals.push_back(cone_axis(v[k]));
    for (int k = 0; k < m / 2; ++k) normals.push_back(cone_axis(add(v[k], v[(k + 1) % m])));
  }
  return normals;
}

long long r1_field(int m) {
  switch (m) {
    case 3:
    case 4:
    case 6: return 0;
    case 5:
    case 10: return 5;
    case 8: return 2;
    case 12: return 3;
    default: fail(Errc::UnsupportedField, "unsupported m-gon");
  }
}

} // namespace

Family family_from_name(const std::string& name) {
  static const std::map<std::string, Family> names = {
      {"A", Family::A},     {"B", Family::B},   {"D", Family::D},   {"Dns", Family::Dns},
      {"I2m", Family::I2m}, {"R0", Family::R0}, {"R1", Family::R1}, {"R2", Family::R2}};
  auto it = names.find(name);
  if (it == names.end()) fail(Errc::InvalidInput, "unknown family '" + name + "'");
  return it->second;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::Dns: return "Dns";
    case Family::I2m: return "I2m";
    case Family::R0: return "R0";
    case Family::R1: return "R1";
    case Family::R2: return "R2";
  }
  return "?";
}

Arrangement generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::A: {
      if (spec.n < 2) fail(Errc::InvalidInput, "family A needs n >= 2");
      std::vector<Vec> normals;
      for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) normals.push_back(e_minus(spec.n, i, j));
      return Arrangement(spec.n, 0, std::move(normals)).canonically_sorted();
    }
    case Family::B: {
      if (spec.n < 2) fail(Errc::InvalidInput, "family B needs n >= 2");
      return Arrangement(spec.n, 0, dns_normals(spec.n, spec.n)).canonically_sorted();
    }
    case Family::D: {
      if (spec.n < 4) fail(Errc::InvalidInput, "family D needs n >= 4");
      return Arrangement(spec.n, 0, dns_normals(spec.n, 0)).canonically_sorted();
    }
    case Family::Dns: {
      if (spec.n < 2 || spec.s < 0 || spec.s > spec.n)
        fail(Errc::InvalidInput, "family Dns needs n >= 2 and 0 <= s <= n");
      return Arrangement(spec.n, 0, dns_normals(spec.n, spec.s)).canonically_sorted();
    }
    case Family::I2m: {
      if (spec.m < 3) fail(Errc::InvalidInput, "family I2m needs m >= 3");
      switch (spec.m) {
        case 3: return Arrangement(2, 0, i2m_recurrence(3, Scalar(1))).canonically_sorted();
        case 4: return Arrangement(2, 0, i2m_tan_table(4)).canonically_sorted();
        case 5:
          return Arrangement(2, 5, i2m_recurrence(5, Scalar(Rat(1, 2), Rat(1, 2), 5)))
              .canonically_sorted();
        case 6:
          return Arrangement(2, 3, i2m_recurrence(6, Scalar(Rat(0), Rat(1), 3)))
              .canonically_sorted();
        case 8: return Arrangement(2, 2, i2m_tan_table(8)).canonically_sorted();
        case 12: return Arrangement(2, 3, i2m_tan_table(12)).canonically_sorted();
        default:
          fail(Errc::UnsupportedField,
               "I2m with m = " + std::to_string(spec.m) + " needs more than one square root");
      }
    }
    case Family::R0: {
      if (spec.m < 3) fail(Errc::InvalidInput, "family R0 needs m >= 3");
      std::vector<Vec> normals;
      normals.push_back(unit(3, 1)); // e2
      for (int k = 1; k <= spec.m - 2; ++k) {
        Vec v(3, Scalar(0));
        v[1] = Scalar(1);
        v[2] = Scalar(-k);
        normals.push_back(std::move(v)); // e2 - k e3, the pencil through the e1-axis
      }
      normals.push_back(unit(3, 0)); // the transversal plane e1
      return Arrangement(3, 0, std::move(normals)).canonically_sorted();
    }
    case Family::R1: {
      if (spec.m < 3) fail(Errc::InvalidInput, "family R1 needs m >= 3");
      return Arrangement(3, r1_field(spec.m), r1_normals(spec.m)).canonically_sorted();
    }
    case Family::R2: {
      if (spec.m < 2) fail(Errc::InvalidInput, "family R2 needs m >= 2");
      std::vector<Vec> normals = r1_normals(2 * spec.m);
      normals.push_back(unit(3, 2)); // the line-at-infinity
      return Arrangement(3, r1_field(2 * spec.m), std::move(normals)).canonically_sorted();
    }
  }
  fail(Errc::InvalidInput, "unknown family");
}

bool SignedPermutation::valid() const {
  int nn = n();
  if (int(delta.size()) != nn) return false;
  std::vector<bool> seen(nn + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > nn || seen[v]) return false;
    seen[v] = true;
  }
  for (int d : delta)
    if (d != 1 && d != -1) return false;
  return true;
}

Tope tope_of_signed_perm(const SignedPermutation& sp, const Arrangement& bn) {
  if (!sp.valid()) fail(Errc::InvalidInput, "invalid signed permutation");
  int n = sp.n();
  Vec x(n);
  for (int i = 0; i < n; ++i) {
    int k = sp.sigma[i]; // |x_k| is the (i+1)-th largest
    x[k - 1] = Scalar((long long)sp.delta[k - 1] * (n - i));
  }
  Tope t(bn.size(), '?');
  for (int h = 0; h < bn.size(); ++h) {
    int s = dot(bn.hyperplane(h).normal, x).sign();
    if (s == 0) fail(Errc::InvalidInput, "witness point lies on a hyperplane");
    t[h] = s > 0 ? '+' : '-';
  }
  return t;
}

Tope tope_of_signed_perm(const SignedPermutation& sp, int n) {
  return tope_of_signed_perm(sp, generate({Family::B, n}));
}

std::optional<Vec> signed_perm_adjacent(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n() != b.n()) fail(Errc::LengthMismatch, "signed permutations of different n");
  int n = a.n();
  if (a.sigma == b.sigma) {
    int where = -1;
    for (int k = 0; k < n; ++k) {
      if (a.delta[k] == b.delta[k]) continue;
      if (where >= 0) return std::nullopt;
      where = k;
    }
    if (where < 0) return std::nullopt;
    if (a.sigma[n - 1] != where + 1) return std::nullopt; // only the innermost sign can flip
    return unit(n, where);
  }
  if (a.delta != b.delta) return std::nullopt;
  int pos = -1;
  for (int p = 0; p < n; ++p) {
    if (a.sigma[p] == b.sigma[p]) continue;
    if (pos >= 0 && p != pos + 1) return std::nullopt;
    if (pos < 0) pos = p;
  }
  if (pos < 0 || pos + 1 >= n) return std::nullopt;
  if (a.sigma[pos] != b.sigma[pos + 1] || a.sigma[pos + 1] != b.sigma[pos]) return std::nullopt;
  for (int p = pos + 2; p < n; ++p)
    if (a.sigma[p] != b.sigma[p]) return std::nullopt;
  int i = a.sigma[pos], j = a.sigma[pos + 1];
  Vec v(n, Scalar(0));
  v[i - 1] = Scalar(1);
  v[j - 1] = Scalar((long long)(-a.delta[i - 1] * a.delta[j - 1]));
  return canonicalize_direction(std::move(v));
}

} // namespace topecycle
