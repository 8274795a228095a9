#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "odplab/classes.hpp"
#include "odplab/delta.hpp"
#include "odplab/poset.hpp"

namespace odplab {

/// A duplicate-free family of subsets of {0..n-1}, kept in canonical order:
/// ascending cardinality, then ascending mask value. Induces an ordered
/// structure via inclusion, set complement and symmetric difference.
struct SetFamily {
  int n = 0;
  std::vector<std::uint64_t> members;

  void canonicalize();
  /// Throws StructuralError unless the family contains the empty set and
  /// the universe and is closed under complement and symmetric difference.
  void check_closed() const;
  int index_of(std::uint64_t mask) const;  // -1 when absent
  std::string label_of(std::uint64_t mask) const;  // "{1,3}" style, 1-based
};

struct Instance {
  FinOrthoPoset poset;
  DeltaTable delta;
};

/// Build order, perp and delta from a closed family.
Instance family_instance(const SetFamily& fam);

/// All subsets of an n-point universe. 1 <= n <= 12.
Instance powerset_odp(int n);
/// Even-cardinality subsets of {1..two_k}; two_k must be even, 2..12.
Instance even_sets_odp(int two_k);
/// Componentwise product; index of (i,j) is i*m2+j. Caps at 4096 elements.
Instance product_odp(const Instance& a, const Instance& b);

/// Smallest family containing the generators and the universe and closed
/// under symmetric difference (always a power of two in size).
SetFamily delta_closure_family(int n, const std::vector<std::uint64_t>& gens);

/// Every symmetric-difference-closed family over {0..n-1} that contains the
/// universe, canonical order, n <= 5.
std::vector<SetFamily> enumerate_delta_subgroups(int n);

/// Point evaluation e(a) = which selective maximal ideals exclude a, plus
/// the three faithfulness flags. Q empty is not an error: the embedding is
/// degenerate and every flag is false.
struct Representation {
  std::vector<Bitset> ideals;  // Q, canonical order
  std::vector<Bitset> e;       // per element, a subset of Q indices
  bool order_embedding = false;
  bool perp_ok = false;
  bool delta_ok = false;
};
Representation representation(const FinOrthoPoset& p, const DeltaTable& d,
                              const EnumOptions& opts = {});

}  // namespace odplab
