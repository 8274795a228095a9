#pragma once

#include <optional>
#include <utility>

#include "odplab/delta.hpp"
#include "odplab/frink.hpp"
#include "odplab/poset.hpp"

namespace odplab {

enum class Tri { False, True, Unknown };

const char* tri_name(Tri t);

/// Whenever bottom is the only common lower bound of a and b, a must land
/// below perp(b). Witness = first failing pair in index order.
struct PairCheck {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;
};
PairCheck in_class_R(const FinOrthoPoset& p);

/// Same conclusion from the stronger hypothesis that a meets both b and
/// perp(b) only at bottom. Under that hypothesis the conclusion is
/// equivalent to a = bottom; both readings are evaluated and must agree.
PairCheck in_class_T(const FinOrthoPoset& p);

/// Every maximal Frink ideal is selective. Needs the full enumeration, so
/// it inherits its node budget and can throw BudgetExceeded.
struct SelectivityCheck {
  bool holds = true;
  Bitset ideal;                              // first non-selective one
  std::optional<std::pair<int, int>> pair;   // complement pair it misses
  std::size_t ideal_count = 0;
  std::size_t selective_count = 0;
};
SelectivityCheck in_class_S(const FinOrthoPoset& p,
                            const EnumOptions& opts = {});

/// Same verdict over an already-enumerated ideal list.
SelectivityCheck selectivity_of(const FinOrthoPoset& p,
                                const std::vector<IdealSet>& ideals);

/// True when a and b split as joins of a pairwise orthogonal triple
/// (a1, c) and (b1, c). Scans candidates c below both; for each c the only
/// viable parts are a1 = meet(a, perp(c)) and b1 = meet(b, perp(c)) (any
/// witness triple forces them), and the joins are re-verified explicitly,
/// so a `true` never rests on that argument.
bool compatible(const FinOrthoPoset& p, int a, int b);
bool compatible(const FinOrthoPoset& p, const BoundTables& t, int a, int b);

struct ClassReport {
  bool in_r = false, in_t = false;
  Tri in_s = Tri::Unknown;
  bool lattice = false, boolean = false;
  std::optional<std::pair<int, int>> r_witness, t_witness;
  std::optional<Bitset> s_witness_ideal;
  std::optional<std::pair<int, int>> s_witness_pair;
  std::optional<std::size_t> ideal_count, selective_count;
};

/// Fills every predicate; a blown ideal-enumeration budget degrades in_s
/// and the counts to unknown instead of failing the whole report.
ClassReport classify(const FinOrthoPoset& p, const DeltaTable& d,
                     const EnumOptions& opts = {});

}  // namespace odplab
