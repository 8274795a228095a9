#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odplab/poset.hpp"
#include "odplab/report.hpp"

namespace odplab::testing {

/// Witness of the first recorded violation of an axiom, if any.
inline std::optional<std::vector<int>> first_witness(const ViolationReport& r,
                                                     const std::string& axiom) {
  for (const auto& v : r.violations)
    if (v.axiom == axiom) return v.witness;
  return std::nullopt;
}

/// Number of times `needle` occurs in `hay` (non-overlapping).
inline std::size_t count_substr(const std::string& hay,
                                const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

/// Ten-element orthoposet whose two top-level coatoms c, d sit above the
/// same incomparable pair of atoms p, q, so meet(c, d) has two maximal
/// lower bounds and therefore does not exist. Layout:
///   0 = bottom, 1 = p, 2 = q, 3 = r, 4 = s,
///   5 = perp(p), 6 = perp(q), 7 = c = perp(r), 8 = d = perp(s), 9 = top,
/// with p,q < c,d and r,s < perp(p),perp(q).
inline FinOrthoPoset meetless_poset() {
  std::vector<std::string> rows = {
      "1111111111",  // bottom
      "0100000111",  // p  <= c, d
      "0010000111",  // q  <= c, d
      "0001011001",  // r  <= perp(p), perp(q)
      "0000111001",  // s  <= perp(p), perp(q)
      "0000010001",  // perp(p)
      "0000001001",  // perp(q)
      "0000000101",  // c
      "0000000011",  // d
      "0000000001",  // top
  };
  return FinOrthoPoset(rows, {9, 5, 6, 7, 8, 1, 2, 3, 4, 0});
}

/// Hexagon: 0 < x < y < 1 together with the reversed chain of complements.
/// A valid orthoposet (even an ortholattice) that is not orthomodular:
/// meet(y, perp(x)) = 0, so join(x, ...) = x != y.
/// Layout: 0 = bottom, 1 = x, 2 = y, 3 = perp(y), 4 = perp(x), 5 = top.
inline FinOrthoPoset hexagon_poset() {
  std::vector<std::string> rows = {
      "111111",  // bottom
      "011001",  // x <= y
      "001001",  // y
      "000111",  // perp(y) <= perp(x)
      "000011",  // perp(x)
      "000001",  // top
  };
  return FinOrthoPoset(rows, {5, 4, 3, 2, 1, 0});
}

}  // namespace odplab::testing
