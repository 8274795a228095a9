#pragma once

#include <cstdint>
#include <vector>

#include "odplab/bitset.hpp"
#include "odplab/poset.hpp"

namespace odplab {

/// Subsets of poset elements; an ideal is just a Bitset over indices.
using IdealSet = Bitset;

/// Elements above everything in a (up_set({}) = all of them).
Bitset up_set(const FinOrthoPoset& p, const Bitset& a);
/// Elements below everything in a.
Bitset down_set(const FinOrthoPoset& p, const Bitset& a);

/// One round of the Frink closure: a together with the lower bounds of its
/// upper bounds.
Bitset closure_once(const FinOrthoPoset& p, const Bitset& a);

/// Least fixpoint of closure_once containing a (bottom falls in on the
/// first round).
Bitset generated_ideal(const FinOrthoPoset& p, const Bitset& a);

/// Contains bottom and is stable under one closure round.
bool is_frink_ideal(const FinOrthoPoset& p, const Bitset& i);
/// Does not contain top.
bool is_proper(const FinOrthoPoset& p, const Bitset& i);
/// Exactly one of each complement pair {a, perp(a)} is inside.
/// Precondition: i is a Frink ideal.
bool is_selective(const FinOrthoPoset& p, const Bitset& i);
/// No proper Frink ideal strictly extends i. Throws std::invalid_argument
/// when i is not a proper Frink ideal.
bool is_maximal(const FinOrthoPoset& p, const Bitset& i);

/// Grow i to a maximal proper ideal by trying elements in ascending index
/// order. Throws std::invalid_argument when i generates an improper ideal.
Bitset extend_to_maximal(const FinOrthoPoset& p, const Bitset& i);

struct EnumOptions {
  std::uint64_t node_budget = 10'000'000;
};

/// All maximal proper Frink ideals, duplicate-free, sorted by member list.
/// Include/exclude DFS over element indices with closure propagation;
/// throws BudgetExceeded when the node budget runs out, returning nothing,
/// because a truncated enumeration would silently lie.
std::vector<Bitset> enumerate_maximal_ideals(const FinOrthoPoset& p,
                                             const EnumOptions& opts = {});

}  // namespace odplab
