#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odplab/report.hpp"

namespace odplab {

/// Eventually periodic subset of the naturals (0-based), always held in
/// canonical form: minimal period, then minimal threshold. Membership of n
/// is prefix[n] below the threshold and tail[n mod period] from there on.
class EPSet {
public:
  EPSet();  // empty set

  static EPSet empty();
  static EPSet naturals();
  static EPSet from_elements(const std::vector<std::uint64_t>& elems);
  static EPSet singleton(std::uint64_t n);
  /// {0, 1, ..., b-1}
  static EPSet range_below(std::uint64_t b);
  /// All n with n mod period in residues.
  static EPSet residues(std::uint32_t period,
                        const std::vector<std::uint32_t>& residues);
  static EPSet make(std::uint32_t period, std::vector<bool> prefix,
                    std::vector<bool> tail);

  std::uint32_t period() const { return p_; }
  std::uint32_t threshold() const { return (std::uint32_t)prefix_.size(); }
  const std::vector<bool>& prefix_bits() const { return prefix_; }
  const std::vector<bool>& tail_bits() const { return tail_; }

  bool member(std::uint64_t n) const;
  std::vector<bool> truncate(std::uint64_t n) const;

  bool is_empty() const;
  bool is_finite() const;
  /// Smallest member, absent when empty.
  std::optional<std::uint64_t> first_element() const;
  /// Members of a finite set, ascending. Throws std::logic_error otherwise.
  std::vector<std::uint64_t> elements() const;
  /// Bits 0..b-1 packed into one word; b <= 64.
  std::uint64_t mask_below(unsigned b) const;

  friend EPSet complement(const EPSet& a);
  friend EPSet union_of(const EPSet& a, const EPSet& b);
  friend EPSet intersect(const EPSet& a, const EPSet& b);
  friend EPSet symdiff(const EPSet& a, const EPSet& b);
  /// a with everything below b removed.
  friend EPSet minus_below(const EPSet& a, std::uint64_t b);

  bool operator==(const EPSet& o) const;
  bool operator!=(const EPSet& o) const { return !(*this == o); }

  /// "ep(p=6; prefix=0b01; tail={2,3,4})", parseable back by the expression
  /// grammar.
  std::string literal() const;

private:
  void canonicalize();

  std::uint32_t p_;
  std::vector<bool> prefix_;
  std::vector<bool> tail_;  // size p_
};

bool is_subset(const EPSet& a, const EPSet& b);

/// A1 = even numbers, A2 = multiples of 3, A3 = A1 symdiff A2; the three
/// pillars of the two worked families.
EPSet ep_A1();
EPSet ep_A2();
EPSet ep_A3();
/// Residue class i mod 6.
EPSet ep_N(int i);

/// Collection {D symdiff F : D in base, F finite, F inside support}. The
/// base is a finite symmetric-difference group of EPSets containing the
/// empty set and the naturals, every nonzero member infinite.
struct CosetFamily {
  std::string name;
  std::vector<EPSet> base;
  EPSet support;

  int empty_index() const;
  int nat_index() const;
  int perp_index(int i) const;  // position of the complement of base[i]
};

/// Validates the group axioms by exhaustive pairwise symdiff; throws
/// StructuralError on any miss.
void check_family(const CosetFamily& fam);

/// Support = all naturals.
CosetFamily build_r_family();
/// Same base group, support = (A1 minus A2) union (A2 intersect A3),
/// computed, not assumed.
CosetFamily build_t_family();

/// A member named by its base set and finite exception set.
struct FamilyMember {
  int base_index = 0;
  EPSet exceptions;
};
EPSet member_value(const CosetFamily& fam, const FamilyMember& m);

/// The unique (D, F) decomposition of x when x belongs to the family.
std::optional<FamilyMember> family_contains(const CosetFamily& fam,
                                            const EPSet& x);

/// Is some nonzero member a subset of s? Exact: either the support meets s
/// (singleton witness) or some base set fits inside s up to finitely many
/// support exceptions.
bool has_nonzero_lower_bound(const CosetFamily& fam, const EPSet& s);
std::optional<FamilyMember> nonzero_lower_bound_witness(const CosetFamily& fam,
                                                        const EPSet& s);

/// Do members a and b admit only the zero lower bound? Throws
/// std::invalid_argument when either is not a family member.
bool meets_zero(const CosetFamily& fam, const EPSet& a, const EPSet& b);

enum class FamilyClass { R, T };
enum class Verdict { Proven, Refuted, Undecided };
const char* verdict_name(Verdict v);

struct RCheckResult {
  Verdict verdict = Verdict::Undecided;
  std::optional<std::pair<EPSet, EPSet>> witness;  // refuting pair
};

/// PROVEN: support cofinite and every pairwise intersection of distinct
/// base sets is infinite or inside the support (then any nonempty a
/// intersect b admits a member below it, so zero meets force disjointness).
/// REFUTED: some base pair violates the implication outright.
RCheckResult class_R_check(const CosetFamily& fam);

struct SearchOptions {
  unsigned fragment_cap = 16;  // largest allowed |support below the bound|
};

/// Brute-force companion of has_nonzero_lower_bound restricted to the
/// fragment {D symdiff F : F inside support, F below bound}: enumerates
/// every such member and tests it against s pointwise. Meant as a test
/// oracle; throws BudgetExceeded when the fragment exceeds 2^20 exception
/// sets per base element.
bool fragment_has_lower_bound(const CosetFamily& fam, const EPSet& s,
                              unsigned bound);

/// Seeded generator for property tests: period 1..max_period, threshold
/// 0..max_threshold, uniform bits, canonicalized.
template <class Rng>
EPSet random_epset(Rng& rng, unsigned max_period = 12,
                   unsigned max_threshold = 20) {
  std::uint32_t p = (std::uint32_t)(rng() % max_period) + 1;
  std::uint32_t t = (std::uint32_t)(rng() % (max_threshold + 1));
  std::vector<bool> prefix(t), tail(p);
  for (std::uint32_t i = 0; i < t; ++i) prefix[i] = rng() & 1;
  for (std::uint32_t i = 0; i < p; ++i) tail[i] = rng() & 1;
  return EPSet::make(p, std::move(prefix), std::move(tail));
}

/// First pair (a, b) in the finite fragment {D symdiff F : F below bound}
/// violating the class implication: for R, meets_zero(a,b) without a
/// inside complement(b); for T, additionally meets_zero(a, complement(b)).
/// Pairs are ordered by (base of a, exceptions of a, base of b,
/// exceptions of b) with exception masks ascending. Throws BudgetExceeded
/// when the fragment would exceed the cap.
std::optional<std::pair<FamilyMember, FamilyMember>> class_witness_search(
    const CosetFamily& fam, unsigned bound, FamilyClass cls,
    const SearchOptions& opts = {});

}  // namespace odplab
