#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "odplab/bitset.hpp"
#include "odplab/report.hpp"

namespace odplab {

/// Finite bounded poset with an order-reversing complement candidate.
/// The order is kept as both row sets (up[i] = everything above i) and
/// column sets (down[i] = everything below i) so bound computations are
/// single word-parallel intersections. Nothing here assumes the axioms
/// actually hold; verify_orthoposet reports whatever fails.
class FinOrthoPoset {
public:
  /// rows[i][j] == '1' means i <= j. perp must be a permutation of 0..m-1
  /// (anything else throws StructuralError). bottom/top are located if a
  /// global minimum/maximum exists, index 0 / m-1 otherwise; the
  /// verification pass flags the latter case.
  FinOrthoPoset(const std::vector<std::string>& rows, std::vector<int> perp,
                std::vector<std::string> labels = {});
  FinOrthoPoset(std::vector<Bitset> up_rows, std::vector<int> perp,
                std::vector<std::string> labels = {});
  // Braced row literals would otherwise be ambiguous: a two-element list of
  // string literals also matches vector<Bitset>'s iterator-pair constructor.
  FinOrthoPoset(std::initializer_list<const char*> rows, std::vector<int> perp,
                std::vector<std::string> labels = {})
      : FinOrthoPoset(std::vector<std::string>(rows.begin(), rows.end()),
                      std::move(perp), std::move(labels)) {}

  int size() const { return m_; }
  bool leq(int a, int b) const { return up_[a].test(b); }
  int perp(int a) const { return perp_[a]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const Bitset& up(int a) const { return up_[a]; }
  const Bitset& down(int a) const { return down_[a]; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int a) const;

  /// Common lower/upper bounds of two elements.
  Bitset lower_bounds(int a, int b) const { return down_[a] & down_[b]; }
  Bitset upper_bounds(int a, int b) const { return up_[a] & up_[b]; }

  /// Greatest lower / least upper bound. nullopt means the bound set has no
  /// greatest/least element, which is not the same thing as the bound being
  /// bottom or top.
  std::optional<int> meet(int a, int b) const;
  std::optional<int> join(int a, int b) const;

  /// Greatest element of an arbitrary set, if one exists.
  std::optional<int> greatest_of(const Bitset& s) const;
  std::optional<int> least_of(const Bitset& s) const;

  /// Covering relation: pairs (x,y) with x < y and nothing strictly between.
  std::vector<std::pair<int, int>> cover_pairs() const;

private:
  void finish();

  int m_;
  std::vector<Bitset> up_, down_;
  std::vector<int> perp_;
  std::vector<std::string> labels_;
  int bottom_ = 0, top_ = 0;
};

/// Check reflexivity, antisymmetry, transitivity, global bounds, perp
/// involution and antitonicity, and that x meets its complement only at
/// bottom and joins it only at top. Witnesses are the first failures in
/// index scan order.
ViolationReport verify_orthoposet(const FinOrthoPoset& p,
                                  const CheckOptions& opts = {});

/// -1 entries mean the meet/join does not exist.
struct BoundTables {
  std::vector<std::int32_t> meet, join;
  int m = 0;
  std::int32_t meet_of(int a, int b) const { return meet[(std::size_t)a * m + b]; }
  std::int32_t join_of(int a, int b) const { return join[(std::size_t)a * m + b]; }
};
BoundTables bound_tables(const FinOrthoPoset& p);

bool is_lattice(const FinOrthoPoset& p);
bool is_lattice(const BoundTables& t);

/// Lattice plus distributivity of meet over join.
bool is_boolean(const FinOrthoPoset& p);
bool is_boolean(const BoundTables& t);

/// Hasse diagram in DOT form, nodes in index order, edges lower -> upper.
std::string to_dot(const FinOrthoPoset& p, const std::string& name = "poset");

}  // namespace odplab
