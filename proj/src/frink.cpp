#include "odplab/frink.hpp"

#include <algorithm>
#include <stdexcept>

#include "odplab/report.hpp"

namespace odplab {

Bitset up_set(const FinOrthoPoset& p, const Bitset& a) {
  Bitset s = Bitset::full(p.size());
  for (std::size_t i = a.first(); i < a.universe(); i = a.next(i + 1))
    s &= p.up((int)i);
  return s;
}

Bitset down_set(const FinOrthoPoset& p, const Bitset& a) {
  Bitset s = Bitset::full(p.size());
  for (std::size_t i = a.first(); i < a.universe(); i = a.next(i + 1))
    s &= p.down((int)i);
  return s;
}

Bitset closure_once(const FinOrthoPoset& p, const Bitset& a) {
  return a | down_set(p, up_set(p, a));
}

Bitset generated_ideal(const FinOrthoPoset& p, const Bitset& a) {
  Bitset cur = a;
  for (int round = 0; round <= p.size(); ++round) {
    Bitset next = closure_once(p, cur);
    if (next == cur) return cur;
    cur = next;
  }
  return cur;  // unreachable: closure grows strictly until stable
}

bool is_frink_ideal(const FinOrthoPoset& p, const Bitset& i) {
  if (!i.test(p.bottom())) return false;
  return closure_once(p, i).subset_of(i);
}

bool is_proper(const FinOrthoPoset& p, const Bitset& i) {
  return !i.test(p.top());
}

bool is_selective(const FinOrthoPoset& p, const Bitset& i) {
  for (int a = 0; a < p.size(); ++a)
    if (i.test(a) == i.test(p.perp(a))) return false;
  return true;
}

bool is_maximal(const FinOrthoPoset& p, const Bitset& i) {
  if (!is_frink_ideal(p, i) || !is_proper(p, i))
    throw std::invalid_argument("is_maximal needs a proper Frink ideal");
  for (int a = 0; a < p.size(); ++a) {
    if (i.test(a)) continue;
    Bitset grown = i;
    grown.set(a);
    if (is_proper(p, generated_ideal(p, grown))) return false;
  }
  return true;
}

Bitset extend_to_maximal(const FinOrthoPoset& p, const Bitset& i) {
  Bitset cur = generated_ideal(p, i);
  if (!is_proper(p, cur))
    throw std::invalid_argument("extend_to_maximal: input generates an improper ideal");
  for (int a = 0; a < p.size(); ++a) {
    if (cur.test(a)) continue;
    Bitset grown = cur;
    grown.set(a);
    grown = generated_ideal(p, grown);
    if (is_proper(p, grown)) cur = grown;
  }
  return cur;
}

namespace {

struct IdealDfs {
  const FinOrthoPoset& p;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Bitset> found;

  IdealDfs(const FinOrthoPoset& p, std::uint64_t budget)
      : p(p), budget(budget) {}

  // in: a proper Frink ideal. out: elements promised to stay outside.
  // Every element below `next` is already decided one way or the other.
  void walk(const Bitset& in, const Bitset& out, int next) {
    if (++nodes > budget)
      throw BudgetExceeded("ideal enumeration exceeded node budget of " +
                           std::to_string(budget));
    const int m = p.size();
    while (next < m && (in.test(next) || out.test(next))) ++next;
    if (next == m) {
      if (is_maximal(p, in)) found.push_back(in);
      return;
    }
    Bitset grown = in;
    grown.set(next);
    grown = generated_ideal(p, grown);
    if (is_proper(p, grown) && !grown.intersects(out))
      walk(grown, out, next + 1);
    Bitset out2 = out;
    out2.set(next);
    walk(in, out2, next + 1);
  }
};

}  // namespace

std::vector<Bitset> enumerate_maximal_ideals(const FinOrthoPoset& p,
                                             const EnumOptions& opts) {
  Bitset seed(p.size());
  seed.set(p.bottom());
  Bitset root = generated_ideal(p, seed);
  if (!is_proper(p, root)) return {};
  IdealDfs dfs(p, opts.node_budget);
  dfs.walk(root, Bitset(p.size()), 0);
  std::sort(dfs.found.begin(), dfs.found.end(),
            [](const Bitset& a, const Bitset& b) { return a.lex_before(b); });
  return dfs.found;
}

}  // namespace odplab
