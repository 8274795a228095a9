#include "odplab/delta.hpp"

#include <random>

namespace odplab {

DeltaTable::DeltaTable(int m, std::vector<std::uint16_t> entries)
    : m_(m), entries_(std::move(entries)) {
  if (m_ < 1) throw StructuralError("delta table needs at least one element");
  if (entries_.size() != (std::size_t)m_ * m_)
    throw StructuralError("delta table must have m*m entries");
  for (auto e : entries_)
    if (e >= m_)
      throw StructuralError("delta entry " + std::to_string(e) +
                            " out of range");
}

ViolationReport verify_odp(const FinOrthoPoset& p, const DeltaTable& d,
                           const CheckOptions& opts) {
  if (d.size() != p.size())
    throw StructuralError("delta table size does not match the poset");
  ViolationReport r;
  r.seed = opts.seed;
  const int m = p.size();
  const std::size_t cap = opts.max_witnesses;

  // x d 1 = 1 d x = perp(x); linear, always exhaustive.
  const int top = p.top();
  for (int x = 0; x < m; ++x) {
    if (d.at(x, top) != p.perp(x))
      r.add("delta_top_right", {x}, cap,
            "x d 1 = " + std::to_string(d.at(x, top)) + ", perp(x) = " +
                std::to_string(p.perp(x)));
    if (d.at(top, x) != p.perp(x))
      r.add("delta_top_left", {x}, cap,
            "1 d x = " + std::to_string(d.at(top, x)) + ", perp(x) = " +
                std::to_string(p.perp(x)));
  }

  // Associativity. Exhaustive is m^3 table reads; past the soft cap that is
  // the one scan worth sampling instead.
  auto assoc_at = [&](int x, int y, int z) {
    int lhs = d.at(d.at(x, y), z);
    int rhs = d.at(x, d.at(y, z));
    if (lhs != rhs)
      r.add("delta_associative", {x, y, z}, cap,
            "(x d y) d z = " + std::to_string(lhs) + ", x d (y d z) = " +
                std::to_string(rhs));
  };
  if ((std::size_t)m <= opts.max_elements) {
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) assoc_at(x, y, z);
  } else {
    r.sampled = true;
    r.sampled_axioms.push_back("delta_associative");
    r.sample_count = opts.sample_count;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (std::size_t i = 0; i < opts.sample_count; ++i)
      assoc_at(pick(rng), pick(rng), pick(rng));
  }

  // x,y <= z  =>  x d y <= z: everything above both x and y must sit above
  // x d y, one subset test per pair.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int t = d.at(x, y);
      Bitset common = p.upper_bounds(x, y);
      if (!common.subset_of(p.up(t))) {
        common.subtract(p.up(t));
        r.add("delta_bounded", {x, y, (int)common.first()}, cap,
              "x d y = " + std::to_string(t));
      }
    }
  return r;
}

ViolationReport check_orthomodularity(const FinOrthoPoset& p,
                                      const CheckOptions& opts) {
  ViolationReport r;
  r.seed = opts.seed;
  const int m = p.size();
  const std::size_t cap = opts.max_witnesses;

  auto law_at = [&](int x, int y) {
    if (!p.leq(x, y) || x == y) return;
    auto mu = p.meet(y, p.perp(x));
    if (!mu) {
      r.add("orthomodular", {x, y}, cap, "meet(y, perp(x)) undefined");
      return;
    }
    auto jv = p.join(x, *mu);
    if (!jv)
      r.add("orthomodular", {x, y}, cap, "join(x, meet(y, perp(x))) undefined");
    else if (*jv != y)
      r.add("orthomodular", {x, y}, cap,
            "join(x, meet(y, perp(x))) = " + std::to_string(*jv));
  };
  if ((std::size_t)m <= opts.max_elements) {
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) law_at(x, y);
  } else {
    r.sampled = true;
    r.sampled_axioms.push_back("orthomodular");
    r.sample_count = opts.sample_count;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (std::size_t i = 0; i < opts.sample_count; ++i)
      law_at(pick(rng), pick(rng));
  }
  return r;
}

IdentityReport delta_identities_report(const FinOrthoPoset& p,
                                       const DeltaTable& d,
                                       const CheckOptions& opts) {
  IdentityReport rep;
  const int m = p.size();
  const std::size_t cap = opts.max_witnesses;
  const int bot = p.bottom();
  for (int x = 0; x < m; ++x) {
    if (d.at(x, x) != bot)
      rep.violations.add("delta_self_is_bottom", {x}, cap,
                         "x d x = " + std::to_string(d.at(x, x)));
    if (d.at(x, bot) != x)
      rep.violations.add("delta_bottom_right", {x}, cap,
                         "x d 0 = " + std::to_string(d.at(x, bot)));
    if (d.at(bot, x) != x)
      rep.violations.add("delta_bottom_left", {x}, cap,
                         "0 d x = " + std::to_string(d.at(bot, x)));
  }
  for (int x = 0; x < m && rep.commutative; ++x)
    for (int y = x + 1; y < m; ++y)
      if (d.at(x, y) != d.at(y, x)) {
        rep.commutative = false;
        rep.noncommuting = {x, y};
        break;
      }
  return rep;
}

}  // namespace odplab
