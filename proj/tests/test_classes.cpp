#include <optional>
#include <utility>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "odplab/classes.hpp"
#include "odplab/construct.hpp"

using namespace odplab;
using namespace odplab::testing;

namespace {

// Reference for compatibility: scan every triple (a1, b1, c) of pairwise
// orthogonal elements whose joins exist and recover a and b.
bool brute_compatible(const FinOrthoPoset& p, const BoundTables& t, int a,
                      int b) {
  const int m = p.size();
  for (int c = 0; c < m; ++c)
    for (int a1 = 0; a1 < m; ++a1) {
      if (!p.leq(a1, p.perp(c))) continue;
      if (t.join_of(a1, c) != a) continue;
      for (int b1 = 0; b1 < m; ++b1) {
        if (!p.leq(b1, p.perp(c)) || !p.leq(a1, p.perp(b1))) continue;
        if (t.join_of(b1, c) == b) return true;
      }
    }
  return false;
}

void check_compatible_against_brute(const FinOrthoPoset& p) {
  auto t = bound_tables(p);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      bool expected = brute_compatible(p, t, a, b);
      CHECK(compatible(p, a, b) == expected);
      CHECK(compatible(p, t, a, b) == expected);
    }
}

}  // namespace

TEST_CASE("subset orders satisfy every class predicate") {
  for (int n = 1; n <= 3; ++n) {
    auto inst = powerset_odp(n);
    const auto& p = inst.poset;
    auto r = in_class_R(p);
    CHECK(r.holds);
    CHECK(!r.witness.has_value());
    CHECK(in_class_T(p).holds);
    auto s = in_class_S(p);
    CHECK(s.holds);
    CHECK(s.ideal_count == (std::size_t)n);
    CHECK(s.selective_count == (std::size_t)n);
  }
}

TEST_CASE("even sets of four points fail every class at the same pair") {
  auto inst = even_sets_odp(4);
  const auto& p = inst.poset;

  auto r = in_class_R(p);
  CHECK(!r.holds);
  CHECK(r.witness == std::pair<int, int>{1, 2});

  auto t = in_class_T(p);
  CHECK(!t.holds);
  CHECK(t.witness == std::pair<int, int>{1, 2});

  auto s = in_class_S(p);
  CHECK(!s.holds);
  CHECK(s.ideal_count == 6);
  CHECK(s.selective_count == 0);
  // Lex-first maximal ideal is {bottom, first atom}; the first complement
  // pair it misses entirely is the second atom and its complement.
  Bitset expected(8);
  expected.set(0);
  expected.set(1);
  CHECK(s.ideal == expected);
  CHECK(s.pair == std::pair<int, int>{2, 5});
}

TEST_CASE("even sets of six points fail every class") {
  auto inst = even_sets_odp(6);
  const auto& p = inst.poset;

  auto r = in_class_R(p);
  CHECK(!r.holds);
  CHECK(r.witness == std::pair<int, int>{1, 2});
  auto t = in_class_T(p);
  CHECK(!t.holds);
  CHECK(t.witness == std::pair<int, int>{1, 2});

  auto s = in_class_S(p);
  CHECK(!s.holds);
  CHECK(s.ideal_count == 15);
  CHECK(s.selective_count == 0);
  CHECK(s.ideal == enumerate_maximal_ideals(p)[0]);
  // The reported pair is the first complement pair missed entirely.
  REQUIRE(s.pair.has_value());
  auto [x, px] = *s.pair;
  CHECK(p.perp(x) == px);
  CHECK(!s.ideal.test(x));
  CHECK(!s.ideal.test(px));
  for (int e = 0; e < x; ++e)
    CHECK((s.ideal.test(e) || s.ideal.test(p.perp(e))));
}

TEST_CASE("class membership survives products exactly when both factors pass") {
  auto good = product_odp(powerset_odp(1), powerset_odp(2));
  CHECK(in_class_R(good.poset).holds);
  CHECK(in_class_T(good.poset).holds);
  CHECK(in_class_S(good.poset).holds);

  auto bad = product_odp(powerset_odp(2), even_sets_odp(4));
  CHECK(!in_class_R(bad.poset).holds);
  CHECK(!in_class_T(bad.poset).holds);
  CHECK(!in_class_S(bad.poset).holds);
}

TEST_CASE("class chain holds on the worked examples") {
  std::vector<Instance> insts;
  for (int n = 1; n <= 4; ++n) insts.push_back(powerset_odp(n));
  insts.push_back(even_sets_odp(4));
  insts.push_back(even_sets_odp(6));
  insts.push_back(product_odp(powerset_odp(2), even_sets_odp(4)));
  for (const auto& inst : insts) {
    bool r = in_class_R(inst.poset).holds;
    bool s = in_class_S(inst.poset).holds;
    bool t = in_class_T(inst.poset).holds;
    if (r) CHECK(s);
    if (s) CHECK(t);
  }
}

TEST_CASE("compatibility agrees with the triple scan") {
  check_compatible_against_brute(powerset_odp(1).poset);
  check_compatible_against_brute(powerset_odp(2).poset);
  check_compatible_against_brute(powerset_odp(3).poset);
  check_compatible_against_brute(even_sets_odp(4).poset);
  check_compatible_against_brute(hexagon_poset());
  check_compatible_against_brute(meetless_poset());
  check_compatible_against_brute(even_sets_odp(6).poset);
}

TEST_CASE("compatibility facts on even sets of four points") {
  auto inst = even_sets_odp(4);
  const auto& p = inst.poset;
  // Distinct overlapping atoms are incompatible even though their meet is
  // bottom, which is exactly why this order sits outside every class.
  CHECK(!compatible(p, 1, 2));
  CHECK(*p.meet(1, 2) == 0);
  // Complementary atoms are orthogonal, hence compatible.
  CHECK(compatible(p, 1, p.perp(1)));
  // Comparable elements are always compatible.
  for (int a = 0; a < p.size(); ++a) {
    CHECK(compatible(p, a, a));
    CHECK(compatible(p, 0, a));
    CHECK(compatible(p, a, p.size() - 1));
  }
}

TEST_CASE("full classification report") {
  auto even = even_sets_odp(4);
  auto rep = classify(even.poset, even.delta);
  CHECK(!rep.in_r);
  CHECK(rep.r_witness == std::pair<int, int>{1, 2});
  CHECK(!rep.in_t);
  CHECK(rep.t_witness == std::pair<int, int>{1, 2});
  CHECK(rep.in_s == Tri::False);
  CHECK(rep.ideal_count == std::size_t{6});
  CHECK(rep.selective_count == std::size_t{0});
  REQUIRE(rep.s_witness_ideal.has_value());
  CHECK(rep.s_witness_pair == std::pair<int, int>{2, 5});
  CHECK(rep.lattice);
  CHECK(!rep.boolean);

  auto cube = powerset_odp(3);
  auto crep = classify(cube.poset, cube.delta);
  CHECK(crep.in_r);
  CHECK(crep.in_t);
  CHECK(crep.in_s == Tri::True);
  CHECK(crep.lattice);
  CHECK(crep.boolean);
  CHECK(!crep.r_witness.has_value());
  CHECK(crep.ideal_count == std::size_t{3});
}

TEST_CASE("blown ideal budget degrades selectivity to unknown") {
  auto inst = even_sets_odp(6);
  EnumOptions opts;
  opts.node_budget = 1;
  auto rep = classify(inst.poset, inst.delta, opts);
  CHECK(rep.in_s == Tri::Unknown);
  CHECK(!rep.ideal_count.has_value());
  CHECK(!rep.selective_count.has_value());
  // Everything that does not need the enumeration is still filled in.
  CHECK(!rep.in_r);
  CHECK(!rep.lattice);
  CHECK_THROWS_AS(in_class_S(inst.poset, opts), BudgetExceeded);
}
