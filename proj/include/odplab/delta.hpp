#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "odplab/poset.hpp"
#include "odplab/report.hpp"

namespace odplab {

/// Total m x m table for the binary difference operation. Entries are
/// element indices; construction rejects anything out of range.
class DeltaTable {
public:
  DeltaTable() : m_(0) {}
  DeltaTable(int m, std::vector<std::uint16_t> entries);

  int size() const { return m_; }
  int at(int x, int y) const { return entries_[(std::size_t)x * m_ + y]; }

private:
  int m_;
  std::vector<std::uint16_t> entries_;
};

/// The three difference axioms: associativity, x d 1 = 1 d x = perp(x),
/// and x,y <= z forcing x d y <= z. Associativity is the only cubic table
/// scan; above opts.max_elements it switches to seeded random triples and
/// the report says so.
ViolationReport verify_odp(const FinOrthoPoset& p, const DeltaTable& d,
                           const CheckOptions& opts = {});

/// For every x <= y: meet(y, perp(x)) exists and joins back with x to y.
/// Works on the bare order, no delta needed. Witness = (x, y).
ViolationReport check_orthomodularity(const FinOrthoPoset& p,
                                      const CheckOptions& opts = {});

/// Derived identities x d x = 0 and x d 0 = 0 d x = x, plus an
/// informational commutativity census.
struct IdentityReport {
  ViolationReport violations;
  bool commutative = true;
  std::optional<std::pair<int, int>> noncommuting;  // first pair, if any
  bool ok() const { return violations.ok(); }
};
IdentityReport delta_identities_report(const FinOrthoPoset& p,
                                       const DeltaTable& d,
                                       const CheckOptions& opts = {});

}  // namespace odplab
