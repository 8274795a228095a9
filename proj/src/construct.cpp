#include "odplab/construct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace odplab {

namespace {

int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

bool canonical_less(std::uint64_t a, std::uint64_t b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

void SetFamily::canonicalize() {
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

void SetFamily::check_closed() const {
  if (n < 1 || n > 63) throw StructuralError("universe size must be 1..63");
  const std::uint64_t omega = (std::uint64_t{1} << n) - 1;
  std::set<std::uint64_t> have(members.begin(), members.end());
  if (have.size() != members.size())
    throw StructuralError("family has duplicate members");
  for (auto m : members)
    if (m & ~omega) throw StructuralError("family member leaves the universe");
  if (!have.count(0)) throw StructuralError("family must contain the empty set");
  if (!have.count(omega)) throw StructuralError("family must contain the universe");
  for (auto a : members) {
    if (!have.count(a ^ omega))
      throw StructuralError("family is not closed under complement: missing " +
                            label_of(a ^ omega));
    for (auto b : members)
      if (!have.count(a ^ b))
        throw StructuralError(
            "family is not closed under symmetric difference: missing " +
            label_of(a ^ b));
  }
}

int SetFamily::index_of(std::uint64_t mask) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == mask) return (int)i;
  return -1;
}

std::string SetFamily::label_of(std::uint64_t mask) const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

Instance family_instance(const SetFamily& fam) {
  fam.check_closed();
  const int m = (int)fam.members.size();
  const std::uint64_t omega = (std::uint64_t{1} << fam.n) - 1;
  std::vector<Bitset> up(m, Bitset(m));
  std::vector<int> perp(m);
  std::vector<std::string> labels(m);
  std::vector<std::uint16_t> delta((std::size_t)m * m);
  for (int i = 0; i < m; ++i) {
    labels[i] = fam.label_of(fam.members[i]);
    perp[i] = fam.index_of(fam.members[i] ^ omega);
    for (int j = 0; j < m; ++j) {
      if ((fam.members[i] & ~fam.members[j]) == 0) up[i].set(j);
      delta[(std::size_t)i * m + j] =
          (std::uint16_t)fam.index_of(fam.members[i] ^ fam.members[j]);
    }
  }
  return {FinOrthoPoset(std::move(up), std::move(perp), std::move(labels)),
          DeltaTable(m, std::move(delta))};
}

Instance powerset_odp(int n) {
  if (n < 1 || n > 12)
    throw StructuralError("powerset universe must have 1..12 points");
  SetFamily fam;
  fam.n = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    fam.members.push_back(mask);
  fam.canonicalize();
  return family_instance(fam);
}

Instance even_sets_odp(int two_k) {
  if (two_k < 2 || two_k > 12 || two_k % 2)
    throw StructuralError("even-set universe must have an even size 2..12");
  SetFamily fam;
  fam.n = two_k;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << two_k); ++mask)
    if (popcount(mask) % 2 == 0) fam.members.push_back(mask);
  fam.canonicalize();
  return family_instance(fam);
}

Instance product_odp(const Instance& a, const Instance& b) {
  const int m1 = a.poset.size(), m2 = b.poset.size();
  if ((std::size_t)m1 * m2 > 4096)
    throw StructuralError("product would exceed 4096 elements");
  const int m = m1 * m2;
  std::vector<Bitset> up(m, Bitset(m));
  std::vector<int> perp(m);
  std::vector<std::string> labels(m);
  std::vector<std::uint16_t> delta((std::size_t)m * m);
  auto idx = [m2](int i, int j) { return i * m2 + j; };
  for (int i1 = 0; i1 < m1; ++i1)
    for (int i2 = 0; i2 < m2; ++i2) {
      const int i = idx(i1, i2);
      perp[i] = idx(a.poset.perp(i1), b.poset.perp(i2));
      labels[i] = "(" + a.poset.label(i1) + "," + b.poset.label(i2) + ")";
      const Bitset& u1 = a.poset.up(i1);
      for (std::size_t j1 = u1.first(); j1 < u1.universe(); j1 = u1.next(j1 + 1)) {
        const Bitset& u2 = b.poset.up(i2);
        for (std::size_t j2 = u2.first(); j2 < u2.universe();
             j2 = u2.next(j2 + 1))
          up[i].set(idx((int)j1, (int)j2));
      }
      for (int j1 = 0; j1 < m1; ++j1)
        for (int j2 = 0; j2 < m2; ++j2)
          delta[(std::size_t)i * m + idx(j1, j2)] = (std::uint16_t)idx(
              a.delta.at(i1, j1), b.delta.at(i2, j2));
    }
  return {FinOrthoPoset(std::move(up), std::move(perp), std::move(labels)),
          DeltaTable(m, std::move(delta))};
}

SetFamily delta_closure_family(int n, const std::vector<std::uint64_t>& gens) {
  if (n < 1 || n > 20) throw StructuralError("universe size must be 1..20");
  const std::uint64_t omega = (std::uint64_t{1} << n) - 1;
  for (auto g : gens)
    if (g & ~omega) throw StructuralError("generator leaves the universe");
  std::set<std::uint64_t> closed = {0};
  auto add = [&](std::uint64_t g) {
    if (closed.count(g)) return;
    std::vector<std::uint64_t> snapshot(closed.begin(), closed.end());
    for (auto s : snapshot) closed.insert(s ^ g);
  };
  add(omega);
  for (auto g : gens) add(g);
  SetFamily fam;
  fam.n = n;
  fam.members.assign(closed.begin(), closed.end());
  fam.canonicalize();
  return fam;
}

std::vector<SetFamily> enumerate_delta_subgroups(int n) {
  if (n < 1 || n > 5) throw StructuralError("subgroup enumeration capped at n = 5");
  const std::uint64_t omega = (std::uint64_t{1} << n) - 1;
  // Walk the subgroup lattice upward from {0, omega}: closing any found
  // group with one extra set again yields a group containing omega, and
  // every such group is reached this way.
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::vector<std::uint64_t>> queue;
  auto push = [&](std::set<std::uint64_t> g) {
    std::vector<std::uint64_t> key(g.begin(), g.end());
    if (seen.insert(key).second) queue.push_back(key);
  };
  push({0, omega});
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<std::uint64_t> g = queue[qi];
    std::set<std::uint64_t> gs(g.begin(), g.end());
    for (std::uint64_t x = 1; x < omega; ++x) {
      if (gs.count(x)) continue;
      std::set<std::uint64_t> h = gs;
      for (auto s : gs) h.insert(s ^ x);
      push(h);
    }
  }
  std::vector<SetFamily> out;
  for (auto& key : seen) {
    SetFamily fam;
    fam.n = n;
    fam.members = key;
    fam.canonicalize();
    out.push_back(std::move(fam));
  }
  std::sort(out.begin(), out.end(), [](const SetFamily& a, const SetFamily& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                        b.members.begin(), b.members.end(),
                                        canonical_less);
  });
  return out;
}

Representation representation(const FinOrthoPoset& p, const DeltaTable& d,
                              const EnumOptions& opts) {
  Representation rep;
  for (auto& ideal : enumerate_maximal_ideals(p, opts))
    if (is_selective(p, ideal)) rep.ideals.push_back(ideal);
  const int m = p.size();
  const std::size_t q = rep.ideals.size();
  rep.e.assign(m, Bitset(q));
  if (q == 0) return rep;  // degenerate embedding, flags stay false
  for (int a = 0; a < m; ++a)
    for (std::size_t i = 0; i < q; ++i)
      if (!rep.ideals[i].test(a)) rep.e[a].set(i);
  rep.order_embedding = true;
  rep.perp_ok = true;
  rep.delta_ok = true;
  for (int a = 0; a < m && rep.order_embedding; ++a)
    for (int b = 0; b < m; ++b)
      if (p.leq(a, b) != rep.e[a].subset_of(rep.e[b])) {
        rep.order_embedding = false;
        break;
      }
  for (int a = 0; a < m; ++a) {
    Bitset flipped = rep.e[a];
    flipped.flip_all();
    if (rep.e[p.perp(a)] != flipped) {
      rep.perp_ok = false;
      break;
    }
  }
  for (int a = 0; a < m && rep.delta_ok; ++a)
    for (int b = 0; b < m; ++b)
      if (rep.e[d.at(a, b)] != (rep.e[a] ^ rep.e[b])) {
        rep.delta_ok = false;
        break;
      }
  return rep;
}

}  // namespace odplab
