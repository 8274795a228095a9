#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace odplab {

/// Input that is malformed before any axiom can be judged: non-square
/// matrix, perp not a permutation, delta table of the wrong size, parse
/// failures. Distinct from axiom violations, which are reported, not thrown.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exhaustive search gave up before completing; results would be
/// incomplete, so nothing is returned at all.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One failed axiom instance. `witness` holds element indices in the order
/// the axiom quantifies them.
struct Violation {
  std::string axiom;
  std::vector<int> witness;
  std::string detail;
};

struct CheckOptions {
  std::size_t max_elements = 512;   // soft cap; O(m^3) scans sample above it
  std::size_t max_witnesses = 16;   // per axiom
  std::size_t sample_count = 100000;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Outcome of an axiom suite. Violations are grouped per axiom in scan
/// order, capped at max_witnesses each; counts are always exact.
struct ViolationReport {
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, std::size_t>> counts;  // per axiom
  bool sampled = false;              // true when any scan was randomized
  std::vector<std::string> sampled_axioms;
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;

  bool ok() const { return violations.empty() && total() == 0; }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto& [a, c] : counts) t += c;
    return t;
  }
  void add(const std::string& axiom, std::vector<int> witness,
           std::size_t cap, std::string detail = "") {
    bump(axiom);
    if (count_of(axiom) <= cap)
      violations.push_back({axiom, std::move(witness), std::move(detail)});
  }
  std::size_t count_of(const std::string& axiom) const {
    for (auto& [a, c] : counts)
      if (a == axiom) return c;
    return 0;
  }

private:
  void bump(const std::string& axiom) {
    for (auto& [a, c] : counts)
      if (a == axiom) {
        ++c;
        return;
      }
    counts.emplace_back(axiom, 1);
  }
};

}  // namespace odplab
