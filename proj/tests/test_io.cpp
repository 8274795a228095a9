#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "odplab/construct.hpp"
#include "odplab/io.hpp"

using namespace odplab;
using namespace odplab::testing;

namespace {

void check_message_contains(const std::string& text, const std::string& needle) {
  try {
    read_instance_text(text);
    FAIL("expected a parse error for: " << text);
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("write and read round trips") {
  for (auto inst : {powerset_odp(3), even_sets_odp(4), even_sets_odp(6)}) {
    auto text = instance_text(inst.poset, &inst.delta);
    auto parsed = read_instance_text(text);
    REQUIRE(parsed.delta.has_value());
    CHECK(parsed.poset.size() == inst.poset.size());
    for (int a = 0; a < inst.poset.size(); ++a) {
      CHECK(parsed.poset.label(a) == inst.poset.label(a));
      CHECK(parsed.poset.perp(a) == inst.poset.perp(a));
      for (int b = 0; b < inst.poset.size(); ++b) {
        CHECK(parsed.poset.leq(a, b) == inst.poset.leq(a, b));
        CHECK(parsed.delta->at(a, b) == inst.delta.at(a, b));
      }
    }
    // Canonical emission: parsing and re-emitting is byte-stable.
    CHECK(instance_text(parsed.poset, &*parsed.delta) == text);
  }

  // Order-only round trip, no difference table.
  auto p = meetless_poset();
  auto text = instance_text(p, nullptr);
  auto parsed = read_instance_text(text);
  CHECK(!parsed.delta.has_value());
  CHECK(parsed.poset.size() == 10);
  CHECK(instance_text(parsed.poset, nullptr) == text);
}

TEST_CASE("emitted text is the documented format") {
  auto inst = powerset_odp(2);
  CHECK(instance_text(inst.poset, &inst.delta) ==
        "odp v1\n"
        "elements 4\n"
        "leq\n"
        "1111\n"
        "0101\n"
        "0011\n"
        "0001\n"
        "perp 3 2 1 0\n"
        "delta\n"
        "0 1 2 3\n"
        "1 0 3 2\n"
        "2 3 0 1\n"
        "3 2 1 0\n"
        "labels {} {1} {2} {1,2}\n");
}

TEST_CASE("comments, blank lines and stray whitespace are tolerated") {
  auto parsed = read_instance_text(
      "# subset order on two points\n"
      "odp v1\n"
      "\n"
      "elements 2\n"
      "  leq\n"
      "11\n"
      "01\r\n"
      "# complement swaps the ends\n"
      "perp 1 0\n");
  CHECK(parsed.poset.size() == 2);
  CHECK(!parsed.delta.has_value());
  CHECK(parsed.poset.leq(0, 1));
  CHECK(verify_orthoposet(parsed.poset).ok());
}

TEST_CASE("family input builds the subset instance") {
  auto parsed = read_instance_text(
      "family v1\n"
      "universe 2\n"
      "00\n"
      "10\n"
      "01\n"
      "11\n");
  REQUIRE(parsed.delta.has_value());
  CHECK(parsed.poset.size() == 4);
  CHECK(parsed.poset.label(1) == "{1}");
  CHECK(parsed.poset.label(3) == "{1,2}");
  auto ref = powerset_odp(2);
  CHECK(instance_text(parsed.poset, &*parsed.delta) ==
        instance_text(ref.poset, &ref.delta));

  // Families must be difference-closed.
  CHECK_THROWS_AS(read_instance_text("family v1\nuniverse 2\n00\n10\n11\n"),
                  StructuralError);
}

TEST_CASE("parse errors carry the line number") {
  check_message_contains("", "line 0");
  check_message_contains("odp v2\n", "header");
  check_message_contains("odp v1\nelements zero\n", "element count");
  check_message_contains("odp v1\nelements 2\nleq\n11\n", "truncated");
  check_message_contains("odp v1\nelements 2\nleq\n11\n011\nperp 1 0\n",
                         "line 5");
  check_message_contains("odp v1\nelements 2\nleq\n11\n01\nperp 1\n",
                         "perp needs exactly 2");
  check_message_contains("odp v1\nelements 2\nleq\n11\n01\nperp 1 0\nwhat\n",
                         "unknown section");
  check_message_contains(
      "odp v1\nelements 2\nleq\n11\n01\nleq\n11\n01\nperp 1 0\n",
      "duplicate leq");
  check_message_contains("odp v1\nelements 2\nperp 1 0\n", "missing leq");
  check_message_contains("odp v1\nelements 2\nleq\n11\n01\n", "missing perp");
  check_message_contains(
      "odp v1\nelements 2\nleq\n11\n01\nperp 1 0\ndelta\n0 2\n1 0\n",
      "out of range");
  check_message_contains("family v1\nuniverse 70\n", "1..63");
  check_message_contains("family v1\nuniverse 2\n", "no members");
  check_message_contains("family v1\nuniverse 2\n012\n", "line 3");
}

TEST_CASE("stream and string entry points agree") {
  auto inst = even_sets_odp(4);
  auto text = instance_text(inst.poset, &inst.delta);
  std::istringstream in(text);
  auto a = read_instance(in);
  auto b = read_instance_text(text);
  CHECK(instance_text(a.poset, &*a.delta) == instance_text(b.poset, &*b.delta));

  std::ostringstream out;
  write_instance(out, inst.poset, &inst.delta);
  CHECK(out.str() == text);
}
