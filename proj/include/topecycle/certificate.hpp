#pragma once

#include "topecycle/tope.hpp"

namespace topecycle {

// A Hamiltonian cycle in certificate form: a start tope and one flipped
// hyperplane index per step.  Independently checkable against any graph.
struct HamiltonCertificate {
  Tope start;
  std::vector<int> flips;

  bool operator==(const HamiltonCertificate& o) const = default;
};

struct VerifyReport {
  enum Status { Ok, BadIndex, NonEdgeStep, RepeatedTope, NotSpanning, NotClosed };
  Status status = Ok;
  int step = -1; // first violating step
  std::string detail;
  bool ok() const { return status == Ok; }
};

const char* verify_status_name(VerifyReport::Status s);

// Walks the flips from the start: every step must be an edge of g of the
// flipped type, every tope is visited exactly once, the count spans g and
// the walk returns to the start.  Reports the first violation.
VerifyReport verify_certificate(const TopeGraph& g, const HamiltonCertificate& c);

// The visited topes t_0 = start, t_1, ..., t_{L-1} (without the closing
// return).
std::vector<Tope> certificate_topes(const HamiltonCertificate& c);

std::string write_certificate(const HamiltonCertificate& c);
HamiltonCertificate parse_certificate(const std::string& text);

// Certificate form of an explicit closed tope sequence.
HamiltonCertificate certificate_from_cycle(const std::vector<Tope>& cycle);

} // namespace topecycle
