#include "odplab/poset.hpp"

#include <algorithm>
#include <sstream>

namespace odplab {

FinOrthoPoset::FinOrthoPoset(const std::vector<std::string>& rows,
                             std::vector<int> perp,
                             std::vector<std::string> labels)
    : m_((int)rows.size()), perp_(std::move(perp)), labels_(std::move(labels)) {
  up_.assign(m_, Bitset(m_));
  for (int i = 0; i < m_; ++i) {
    if ((int)rows[i].size() != m_)
      throw StructuralError("leq matrix is not square: row " +
                            std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(m_));
    for (int j = 0; j < m_; ++j) {
      char c = rows[i][j];
      if (c != '0' && c != '1')
        throw StructuralError("leq matrix entries must be '0' or '1'");
      if (c == '1') up_[i].set(j);
    }
  }
  finish();
}

FinOrthoPoset::FinOrthoPoset(std::vector<Bitset> up_rows, std::vector<int> perp,
                             std::vector<std::string> labels)
    : m_((int)up_rows.size()), up_(std::move(up_rows)), perp_(std::move(perp)),
      labels_(std::move(labels)) {
  for (auto& r : up_)
    if ((int)r.universe() != m_)
      throw StructuralError("leq matrix is not square");
  finish();
}

void FinOrthoPoset::finish() {
  if (m_ < 1) throw StructuralError("poset needs at least one element");
  if ((int)perp_.size() != m_)
    throw StructuralError("perp must list exactly one index per element");
  std::vector<char> seen(m_, 0);
  for (int v : perp_) {
    if (v < 0 || v >= m_)
      throw StructuralError("perp index " + std::to_string(v) + " out of range");
    if (seen[v]++) throw StructuralError("perp is not a permutation");
  }
  if (!labels_.empty() && (int)labels_.size() != m_)
    throw StructuralError("labels must cover every element");

  down_.assign(m_, Bitset(m_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      if (up_[i].test(j)) down_[j].set(i);

  Bitset all = Bitset::full(m_);
  bottom_ = 0;
  top_ = m_ - 1;
  for (int i = 0; i < m_; ++i) {
    if (up_[i] == all) {
      bottom_ = i;
      break;
    }
  }
  for (int i = 0; i < m_; ++i) {
    if (down_[i] == all) {
      top_ = i;
      break;
    }
  }
}

std::string FinOrthoPoset::label(int a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

std::optional<int> FinOrthoPoset::greatest_of(const Bitset& s) const {
  for (std::size_t i = s.first(); i < s.universe(); i = s.next(i + 1))
    if (s.subset_of(down_[i])) return (int)i;
  return std::nullopt;
}

std::optional<int> FinOrthoPoset::least_of(const Bitset& s) const {
  for (std::size_t i = s.first(); i < s.universe(); i = s.next(i + 1))
    if (s.subset_of(up_[i])) return (int)i;
  return std::nullopt;
}

std::optional<int> FinOrthoPoset::meet(int a, int b) const {
  return greatest_of(lower_bounds(a, b));
}

std::optional<int> FinOrthoPoset::join(int a, int b) const {
  return least_of(upper_bounds(a, b));
}

std::vector<std::pair<int, int>> FinOrthoPoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m_; ++i) {
    Bitset above = up_[i];
    above.reset(i);
    Bitset covers = above;
    for (std::size_t k = above.first(); k < above.universe();
         k = above.next(k + 1)) {
      Bitset strict = up_[k];
      strict.reset(k);
      covers.subtract(strict);
    }
    for (std::size_t j = covers.first(); j < covers.universe();
         j = covers.next(j + 1))
      out.emplace_back(i, (int)j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ViolationReport verify_orthoposet(const FinOrthoPoset& p,
                                  const CheckOptions& opts) {
  ViolationReport r;
  const int m = p.size();
  const std::size_t cap = opts.max_witnesses;

  for (int i = 0; i < m; ++i)
    if (!p.leq(i, i)) r.add("reflexive", {i}, cap);

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (p.leq(i, j) && p.leq(j, i)) r.add("antisymmetric", {i, j}, cap);

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !p.leq(i, j)) continue;
      if (!p.up(j).subset_of(p.up(i))) {
        Bitset bad = p.up(j);
        bad.subtract(p.up(i));
        r.add("transitive", {i, j, (int)bad.first()}, cap);
      }
    }

  bool has_bottom = p.up(p.bottom()) == Bitset::full(m);
  bool has_top = p.down(p.top()) == Bitset::full(m);
  if (!has_bottom) r.add("bottom_exists", {}, cap, "no global minimum");
  if (!has_top) r.add("top_exists", {}, cap, "no global maximum");

  for (int i = 0; i < m; ++i)
    if (p.perp(p.perp(i)) != i) r.add("perp_involution", {i}, cap);

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.leq(i, j) && !p.leq(p.perp(j), p.perp(i)))
        r.add("perp_antitone", {i, j}, cap);

  if (has_bottom && has_top) {
    Bitset only_bottom = Bitset::single(m, p.bottom());
    Bitset only_top = Bitset::single(m, p.top());
    for (int x = 0; x < m; ++x) {
      Bitset lb = p.lower_bounds(x, p.perp(x));
      if (lb != only_bottom) {
        lb.reset(p.bottom());
        r.add("complement_meets_bottom", {x}, cap,
              lb.any() ? "extra common lower bound " + std::to_string(lb.first())
                       : "bottom is not a common lower bound");
      }
      Bitset ub = p.upper_bounds(x, p.perp(x));
      if (ub != only_top) {
        ub.reset(p.top());
        r.add("complement_joins_top", {x}, cap,
              ub.any() ? "extra common upper bound " + std::to_string(ub.first())
                       : "top is not a common upper bound");
      }
    }
  }
  return r;
}

BoundTables bound_tables(const FinOrthoPoset& p) {
  const int m = p.size();
  BoundTables t;
  t.m = m;
  t.meet.assign((std::size_t)m * m, -1);
  t.join.assign((std::size_t)m * m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      auto mv = p.meet(a, b);
      auto jv = p.join(a, b);
      t.meet[(std::size_t)a * m + b] = t.meet[(std::size_t)b * m + a] =
          mv ? *mv : -1;
      t.join[(std::size_t)a * m + b] = t.join[(std::size_t)b * m + a] =
          jv ? *jv : -1;
    }
  return t;
}

bool is_lattice(const BoundTables& t) {
  for (auto v : t.meet)
    if (v < 0) return false;
  for (auto v : t.join)
    if (v < 0) return false;
  return true;
}

bool is_lattice(const FinOrthoPoset& p) { return is_lattice(bound_tables(p)); }

bool is_boolean(const BoundTables& t) {
  if (!is_lattice(t)) return false;
  const int m = t.m;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        int lhs = t.meet_of(a, t.join_of(b, c));
        int rhs = t.join_of(t.meet_of(a, b), t.meet_of(a, c));
        if (lhs != rhs) return false;
      }
  return true;
}

bool is_boolean(const FinOrthoPoset& p) { return is_boolean(bound_tables(p)); }

std::string to_dot(const FinOrthoPoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (auto [lo, hi] : p.cover_pairs())
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace odplab
