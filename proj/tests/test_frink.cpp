#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "odplab/construct.hpp"
#include "odplab/frink.hpp"

using namespace odplab;

namespace {

// Exhaustive reference: every subset that is a proper Frink ideal.
std::vector<Bitset> brute_proper_ideals(const FinOrthoPoset& p) {
  const int m = p.size();
  REQUIRE(m <= 16);
  std::vector<Bitset> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Bitset s(m);
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) s.set(i);
    if (is_frink_ideal(p, s) && is_proper(p, s)) out.push_back(s);
  }
  return out;
}

std::vector<Bitset> brute_maximal_ideals(const FinOrthoPoset& p) {
  auto proper = brute_proper_ideals(p);
  std::vector<Bitset> out;
  for (const auto& i : proper) {
    bool strict_ext = false;
    for (const auto& j : proper)
      if (i != j && i.subset_of(j)) strict_ext = true;
    if (!strict_ext) out.push_back(i);
  }
  std::sort(out.begin(), out.end(),
            [](const Bitset& a, const Bitset& b) { return a.lex_before(b); });
  return out;
}

Bitset from_indices(int m, std::initializer_list<int> idx) {
  Bitset s(m);
  for (int i : idx) s.set(i);
  return s;
}

}  // namespace

TEST_CASE("bound sets of elements and subsets") {
  auto inst = powerset_odp(2);
  const auto& p = inst.poset;

  // No constraints: everything is an upper (and lower) bound.
  CHECK(up_set(p, Bitset(4)) == Bitset::full(4));
  CHECK(down_set(p, Bitset(4)) == Bitset::full(4));

  CHECK(up_set(p, Bitset::single(4, 1)) == p.up(1));
  CHECK(down_set(p, Bitset::single(4, 2)) == p.down(2));

  // The two atoms bound only top from above and bottom from below.
  auto atoms = from_indices(4, {1, 2});
  CHECK(up_set(p, atoms) == Bitset::single(4, 3));
  CHECK(down_set(p, atoms) == Bitset::single(4, 0));
}

TEST_CASE("generated ideals are principal in subset orders") {
  auto inst = powerset_odp(3);
  const auto& p = inst.poset;
  for (int a = 0; a < p.size(); ++a)
    CHECK(generated_ideal(p, Bitset::single(8, a)) == p.down(a));

  // Two atoms generate the principal ideal of their join.
  auto gen = generated_ideal(p, from_indices(8, {1, 2}));
  int join12 = *p.join(1, 2);
  CHECK(gen == p.down(join12));

  // Bottom alone (or nothing) closes to the trivial ideal.
  CHECK(generated_ideal(p, Bitset(8)) == Bitset::single(8, 0));
  CHECK(generated_ideal(p, Bitset::single(8, 0)) == Bitset::single(8, 0));
}

TEST_CASE("two incomparable even-set atoms generate the improper ideal") {
  auto inst = even_sets_odp(4);
  const auto& p = inst.poset;
  // Their only common upper bound is the top, whose lower bounds are
  // everything, so the closure blows up to the full set.
  auto gen = generated_ideal(p, from_indices(8, {1, 2}));
  CHECK(gen == Bitset::full(8));
  CHECK(is_frink_ideal(p, gen));
  CHECK(!is_proper(p, gen));
}

TEST_CASE("ideal membership rejects non-ideals") {
  auto inst = powerset_odp(2);
  const auto& p = inst.poset;
  CHECK(is_frink_ideal(p, from_indices(4, {0, 1})));
  CHECK(is_frink_ideal(p, Bitset::full(4)));
  // Missing bottom.
  CHECK(!is_frink_ideal(p, from_indices(4, {1})));
  // Not closure-stable: contains the top but not the atoms below it.
  CHECK(!is_frink_ideal(p, from_indices(4, {0, 3})));
  // Both atoms force the top in.
  CHECK(!is_frink_ideal(p, from_indices(4, {0, 1, 2})));
}

TEST_CASE("enumeration agrees with the exhaustive reference") {
  std::vector<Instance> insts;
  for (int n = 1; n <= 3; ++n) insts.push_back(powerset_odp(n));
  insts.push_back(even_sets_odp(4));
  insts.push_back(product_odp(powerset_odp(1), even_sets_odp(4)));
  for (const auto& inst : insts) {
    auto expected = brute_maximal_ideals(inst.poset);
    auto got = enumerate_maximal_ideals(inst.poset);
    CHECK(got == expected);
    for (const auto& i : got) CHECK(is_maximal(inst.poset, i));
  }
}

TEST_CASE("proper ideal counts of the worked examples") {
  // Boolean orders: ideals are exactly the principal ones, so 2^n - 1
  // proper ideals and n maximal ones (drop one atom each).
  for (int n = 1; n <= 3; ++n) {
    auto inst = powerset_odp(n);
    CHECK(brute_proper_ideals(inst.poset).size() == (std::size_t{1} << n) - 1);
    CHECK(enumerate_maximal_ideals(inst.poset).size() == (std::size_t)n);
  }
  // Even sets of a 4-point universe: bottom alone plus one ideal per atom.
  auto even = even_sets_odp(4);
  auto proper = brute_proper_ideals(even.poset);
  CHECK(proper.size() == 7);
  auto maximal = enumerate_maximal_ideals(even.poset);
  CHECK(maximal.size() == 6);
  for (const auto& i : maximal) CHECK(i.count() == 2);
}

TEST_CASE("even sets of a 6-point universe: the full ideal inventory") {
  auto inst = even_sets_odp(6);
  const auto& p = inst.poset;
  REQUIRE(p.size() == 32);

  // Three shapes of proper ideal besides {bottom}: one per atom, one per
  // 3-point triangle of pairwise overlapping atoms, and the principal
  // ideal of each coatom. 1 + 15 + 20 + 15 = 51 in total.
  std::vector<Bitset> ideals;
  ideals.push_back(Bitset::single(32, 0));
  for (int a = 1; a <= 15; ++a) ideals.push_back(from_indices(32, {0, a}));

  // Atom indices by point pair, via the labels.
  auto atom_index = [&](int x, int y) {
    std::string want = "{" + std::to_string(std::min(x, y)) + "," +
                       std::to_string(std::max(x, y)) + "}";
    for (int i = 1; i <= 15; ++i)
      if (p.label(i) == want) return i;
    REQUIRE(false);
    return -1;
  };
  for (int x = 1; x <= 6; ++x)
    for (int y = x + 1; y <= 6; ++y)
      for (int z = y + 1; z <= 6; ++z)
        ideals.push_back(from_indices(
            32, {0, atom_index(x, y), atom_index(x, z), atom_index(y, z)}));
  for (int c = 16; c <= 30; ++c) ideals.push_back(p.down(c));

  CHECK(ideals.size() == 51);
  for (const auto& i : ideals) {
    CHECK(is_frink_ideal(p, i));
    CHECK(is_proper(p, i));
  }

  // The independent search finds exactly the 15 coatom principals.
  auto maximal = enumerate_maximal_ideals(p);
  REQUIRE(maximal.size() == 15);
  std::vector<Bitset> principals;
  for (int c = 16; c <= 30; ++c) principals.push_back(p.down(c));
  std::sort(principals.begin(), principals.end(),
            [](const Bitset& a, const Bitset& b) { return a.lex_before(b); });
  CHECK(maximal == principals);

  // Triangles and atom ideals extend into some principal.
  for (const auto& i : ideals)
    if (i.count() <= 4) CHECK(!is_maximal(p, i));
}

TEST_CASE("selectivity picks one element of every complement pair") {
  auto p2 = powerset_odp(2);
  CHECK(is_selective(p2.poset, from_indices(4, {0, 1})));
  CHECK(is_selective(p2.poset, from_indices(4, {0, 2})));
  CHECK(!is_selective(p2.poset, Bitset::single(4, 0)));

  // Even-set ideals miss every complement pair they do not touch.
  auto even = even_sets_odp(4);
  for (const auto& i : enumerate_maximal_ideals(even.poset))
    CHECK(!is_selective(even.poset, i));
}

TEST_CASE("maximal ideals are closed under the difference") {
  for (const auto& inst : {powerset_odp(3), even_sets_odp(4), even_sets_odp(6)}) {
    for (const auto& ideal : enumerate_maximal_ideals(inst.poset)) {
      auto members = ideal.elements();
      for (auto x : members)
        for (auto y : members)
          CHECK(ideal.test((std::size_t)inst.delta.at((int)x, (int)y)));
    }
  }
}

TEST_CASE("greedy extension reaches a maximal ideal") {
  auto inst = powerset_odp(2);
  const auto& p = inst.poset;
  CHECK(extend_to_maximal(p, Bitset::single(4, 0)) == from_indices(4, {0, 1}));
  CHECK(extend_to_maximal(p, from_indices(4, {0, 2})) == from_indices(4, {0, 2}));

  auto even = even_sets_odp(4);
  auto ext = extend_to_maximal(even.poset, Bitset::single(8, 0));
  CHECK(ext == from_indices(8, {0, 1}));
  CHECK(is_maximal(even.poset, ext));

  CHECK_THROWS_AS(extend_to_maximal(p, Bitset::full(4)), std::invalid_argument);
  CHECK_THROWS_AS(extend_to_maximal(p, from_indices(4, {0, 1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_maximal(p, from_indices(4, {0, 3})), std::invalid_argument);
}

TEST_CASE("enumeration gives up loudly on a tiny budget") {
  auto inst = even_sets_odp(6);
  EnumOptions opts;
  opts.node_budget = 1;
  CHECK_THROWS_AS(enumerate_maximal_ideals(inst.poset, opts), BudgetExceeded);
}
