#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "odplab/construct.hpp"
#include "odplab/delta.hpp"

using namespace odplab;

namespace {

std::vector<std::uint64_t> canonical_masks(int n) {
  std::vector<std::uint64_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) {
                     int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
                     return ca != cb ? ca < cb : a < b;
                   });
  return masks;
}

// Every symmetric-difference-closed family over n points that contains the
// universe, found by filtering all subsets of the powerset. Only feasible
// for n <= 4.
std::set<std::vector<std::uint64_t>> brute_subgroups(int n) {
  const int k = 1 << n;
  const std::uint64_t omega = (std::uint64_t{1} << n) - 1;
  std::set<std::vector<std::uint64_t>> out;
  for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
    if (!(pick & 1u) || !((pick >> omega) & 1u)) continue;  // need {} and omega
    std::vector<std::uint64_t> members;
    for (int a = 0; a < k; ++a)
      if ((pick >> a) & 1u) members.push_back((std::uint64_t)a);
    bool closed = true;
    for (auto a : members) {
      for (auto b : members)
        if (!((pick >> (a ^ b)) & 1u)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) {
      std::sort(members.begin(), members.end());
      out.insert(members);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("powerset construction is the subset order with symmetric difference") {
  auto inst = powerset_odp(3);
  const auto& p = inst.poset;
  REQUIRE(p.size() == 8);
  CHECK(p.label(0) == "{}");
  CHECK(p.label(7) == "{1,2,3}");

  auto masks = canonical_masks(3);
  auto index_of = [&](std::uint64_t m) {
    return (int)(std::find(masks.begin(), masks.end(), m) - masks.begin());
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      CHECK(inst.delta.at(a, b) == index_of(masks[a] ^ masks[b]));

  CHECK(verify_orthoposet(p).ok());
  CHECK(verify_odp(p, inst.delta).ok());
}

TEST_CASE("even-set construction") {
  auto inst = even_sets_odp(4);
  REQUIRE(inst.poset.size() == 8);
  // Atoms are pairwise incomparable two-point sets.
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      CHECK(inst.poset.leq(a, b) == (a == b));
  CHECK(verify_odp(inst.poset, inst.delta).ok());

  // The smallest even universe gives the two-element chain.
  auto tiny = even_sets_odp(2);
  CHECK(tiny.poset.size() == 2);
  CHECK(tiny.poset.label(1) == "{1,2}");

  CHECK(even_sets_odp(6).poset.size() == 32);

  CHECK_THROWS_AS(even_sets_odp(3), StructuralError);
  CHECK_THROWS_AS(even_sets_odp(0), StructuralError);
  CHECK_THROWS_AS(even_sets_odp(14), StructuralError);
  CHECK_THROWS_AS(powerset_odp(0), StructuralError);
  CHECK_THROWS_AS(powerset_odp(13), StructuralError);
}

TEST_CASE("products work componentwise") {
  auto a = powerset_odp(1);
  auto b = even_sets_odp(4);
  auto prod = product_odp(a, b);
  const int m2 = b.poset.size();
  REQUIRE(prod.poset.size() == a.poset.size() * m2);

  for (int i1 = 0; i1 < a.poset.size(); ++i1)
    for (int j1 = 0; j1 < m2; ++j1) {
      int x = i1 * m2 + j1;
      CHECK(prod.poset.perp(x) == a.poset.perp(i1) * m2 + b.poset.perp(j1));
      for (int i2 = 0; i2 < a.poset.size(); ++i2)
        for (int j2 = 0; j2 < m2; ++j2) {
          int y = i2 * m2 + j2;
          CHECK(prod.poset.leq(x, y) ==
                (a.poset.leq(i1, i2) && b.poset.leq(j1, j2)));
          CHECK(prod.delta.at(x, y) ==
                a.delta.at(i1, i2) * m2 + b.delta.at(j1, j2));
        }
    }
  CHECK(prod.poset.label(1 * m2 + 2) == "({1},{1,3})");
  CHECK(verify_odp(prod.poset, prod.delta).ok());

  CHECK_THROWS_AS(product_odp(powerset_odp(6), powerset_odp(7)),
                  StructuralError);
}

TEST_CASE("difference closure of a generating set") {
  auto fam = delta_closure_family(4, {0b0011, 0b0101});
  CHECK(fam.members == std::vector<std::uint64_t>{0, 3, 5, 6, 9, 10, 12, 15});
  CHECK_NOTHROW(fam.check_closed());
  auto inst = family_instance(fam);
  CHECK(verify_orthoposet(inst.poset).ok());
  CHECK(verify_odp(inst.poset, inst.delta).ok());

  // No generators: just the forced empty set and universe.
  auto trivial = delta_closure_family(4, {});
  CHECK(trivial.members == std::vector<std::uint64_t>{0, 15});

  // Closures are subgroups, hence powers of two in size.
  auto odd = delta_closure_family(5, {1, 2, 4});
  CHECK(odd.members.size() == 16);

  CHECK_THROWS_AS(delta_closure_family(3, {0b1000}), StructuralError);
  CHECK_THROWS_AS(delta_closure_family(0, {}), StructuralError);
  CHECK_THROWS_AS(delta_closure_family(21, {}), StructuralError);
}

TEST_CASE("family canonical form and labels") {
  SetFamily fam;
  fam.n = 4;
  fam.members = {5, 0, 5, 15, 3, 6, 9, 10, 12};
  fam.canonicalize();
  CHECK(fam.members == std::vector<std::uint64_t>{0, 3, 5, 6, 9, 10, 12, 15});
  CHECK(fam.index_of(5) == 2);
  CHECK(fam.index_of(7) == -1);
  CHECK(fam.label_of(0) == "{}");
  CHECK(fam.label_of(5) == "{1,3}");
  CHECK(fam.label_of(15) == "{1,2,3,4}");
}

TEST_CASE("closure checking catches every defect") {
  auto closed_throws = [](int n, std::vector<std::uint64_t> members) {
    SetFamily fam;
    fam.n = n;
    fam.members = std::move(members);
    CHECK_THROWS_AS(fam.check_closed(), StructuralError);
  };
  closed_throws(4, {3, 12, 15});        // missing the empty set
  closed_throws(4, {0, 3});             // missing the universe / complement
  closed_throws(4, {0, 3, 5, 15});      // not symmetric-difference closed
  closed_throws(4, {0, 0, 15, 15});     // duplicates
  closed_throws(4, {0, 16, 15});        // member outside the universe
}

TEST_CASE("subgroup enumeration matches the exhaustive reference") {
  const std::size_t expected_counts[] = {0, 1, 2, 5, 16, 67};
  for (int n = 1; n <= 5; ++n) {
    auto families = enumerate_delta_subgroups(n);
    CHECK(families.size() == expected_counts[n]);
    for (const auto& f : families) CHECK_NOTHROW(f.check_closed());
    if (n <= 4) {
      std::set<std::vector<std::uint64_t>> got;
      for (const auto& f : families) {
        auto members = f.members;
        std::sort(members.begin(), members.end());
        got.insert(members);
      }
      CHECK(got == brute_subgroups(n));
    }
  }
  CHECK_THROWS_AS(enumerate_delta_subgroups(6), StructuralError);
}

TEST_CASE("point evaluation embeds Boolean orders faithfully") {
  for (int n = 2; n <= 3; ++n) {
    auto inst = powerset_odp(n);
    const auto& p = inst.poset;
    auto rep = representation(p, inst.delta);
    REQUIRE(rep.ideals.size() == (std::size_t)n);
    REQUIRE(rep.e.size() == (std::size_t)p.size());
    CHECK(rep.order_embedding);
    CHECK(rep.perp_ok);
    CHECK(rep.delta_ok);

    // Re-verify the three flags semantically.
    for (int a = 0; a < p.size(); ++a) {
      for (int b = 0; b < p.size(); ++b) {
        CHECK(p.leq(a, b) == rep.e[a].subset_of(rep.e[b]));
        CHECK(rep.e[inst.delta.at(a, b)] == (rep.e[a] ^ rep.e[b]));
      }
      auto flipped = rep.e[a];
      flipped.flip_all();
      CHECK(rep.e[p.perp(a)] == flipped);
    }
    CHECK(rep.e[0].none());
    CHECK(rep.e[p.size() - 1].count() == (std::size_t)n);
  }
}

TEST_CASE("point evaluation degenerates without selective ideals") {
  for (auto inst : {even_sets_odp(4), even_sets_odp(6)}) {
    auto rep = representation(inst.poset, inst.delta);
    CHECK(rep.ideals.empty());
    CHECK(!rep.order_embedding);
    CHECK(!rep.perp_ok);
    CHECK(!rep.delta_ok);
    CHECK(rep.e.size() == (std::size_t)inst.poset.size());
  }
}
