#include "topecycle/certificate.hpp"

#include <sstream>
#include <unordered_set>

namespace topecycle {

const char* verify_status_name(VerifyReport::Status s) {
  switch (s) {
    case VerifyReport::Ok: return "Ok";
    case VerifyReport::BadIndex: return "BadIndex";
    case VerifyReport::NonEdgeStep: return "NonEdgeStep";
    case VerifyReport::RepeatedTope: return "RepeatedTope";
    case VerifyReport::NotSpanning: return "NotSpanning";
    case VerifyReport::NotClosed: return "NotClosed";
  }
  return "?";
}

VerifyReport verify_certificate(const TopeGraph& g, const HamiltonCertificate& c) {
  VerifyReport rep;
  auto violate = [&](VerifyReport::Status s, int step, std::string detail) {
    rep.status = s;
    rep.step = step;
    rep.detail = std::move(detail);
    return rep;
  };

  if (int(c.start.size()) != g.m())
    return violate(VerifyReport::BadIndex, -1, "start tope length differs from m");
  int cur = g.index_of(c.start);
  if (cur < 0) return violate(VerifyReport::NonEdgeStep, -1, "start tope not in the graph");
  if (int(c.flips.size()) != g.tope_count())
    return violate(VerifyReport::NotSpanning,
                   -1, "certificate length " + std::to_string(c.flips.size()) +
                           " differs from tope count " + std::to_string(g.tope_count()));

  std::vector<bool> visited(g.tope_count(), false);
  visited[cur] = true;
  int start_id = cur;
  Tope t = c.start;
  for (size_t k = 0; k < c.flips.size(); ++k) {
    int h = c.flips[k];
    if (h < 0 || h >= g.m())
      return violate(VerifyReport::BadIndex, int(k), "flip index out of range");
    t = flipped(t, h);
    int next = g.index_of(t);
    if (next < 0 || !g.has_edge(cur, next))
      return violate(VerifyReport::NonEdgeStep, int(k),
                     "step does not follow an edge of the graph");
    bool last = (k + 1 == c.flips.size());
    if (!last && visited[next])
      return violate(VerifyReport::RepeatedTope, int(k), "tope visited twice: " + t);
    visited[next] = true;
    cur = next;
  }
  if (cur != start_id)
    return violate(VerifyReport::NotClosed, int(c.flips.size()) - 1,
                   "walk ends at " + t + " instead of the start");
  for (int i = 0; i < g.tope_count(); ++i)
    if (!visited[i]) return violate(VerifyReport::NotSpanning, -1, "tope missed: " + g.tope(i));
  return rep;
}

std::vector<Tope> certificate_topes(const HamiltonCertificate& c) {
  std::vector<Tope> out;
  out.reserve(c.flips.size());
  Tope t = c.start;
  for (size_t k = 0; k < c.flips.size(); ++k) {
    out.push_back(t);
    t = flipped(t, c.flips[k]);
  }
  return out;
}

std::string write_certificate(const HamiltonCertificate& c) {
  std::ostringstream out;
  out << "cycle m " << c.start.size() << " len " << c.flips.size() << " start " << c.start
      << "\n";
  for (size_t i = 0; i < c.flips.size(); ++i) {
    out << c.flips[i];
    out << ((i + 1) % 16 == 0 || i + 1 == c.flips.size() ? '\n' : ' ');
  }
  return out.str();
}

HamiltonCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string kw_cycle, kw_m, kw_len, kw_start;
  long long m = 0, len = 0;
  HamiltonCertificate c;
  if (!(in >> kw_cycle >> kw_m >> m >> kw_len >> len >> kw_start >> c.start) ||
      kw_cycle != "cycle" || kw_m != "m" || kw_len != "len" || kw_start != "start")
    fail(Errc::ParseError, "bad certificate header");
  if ((long long)c.start.size() != m) fail(Errc::ParseError, "start tope length differs from m");
  for (long long i = 0; i < len; ++i) {
    int f;
    if (!(in >> f)) fail(Errc::ParseError, "missing flip " + std::to_string(i));
    c.flips.push_back(f);
  }
  return c;
}

HamiltonCertificate certificate_from_cycle(const std::vector<Tope>& cycle) {
  if (cycle.size() < 2) fail(Errc::InvalidInput, "cycle needs at least two topes");
  HamiltonCertificate c;
  c.start = cycle[0];
  for (size_t i = 0; i < cycle.size(); ++i) {
    const Tope& a = cycle[i];
    const Tope& b = cycle[(i + 1) % cycle.size()];
    auto d = adjacency(a, b);
    if (!d) fail(Errc::InvalidInput, "consecutive cycle topes are not adjacent");
    c.flips.push_back(*d);
  }
  return c;
}

} // namespace topecycle
