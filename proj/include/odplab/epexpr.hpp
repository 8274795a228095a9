#pragma once

#include <string>

#include "odplab/epset.hpp"

namespace odplab {

/// Parses the textual set language:
///   constant  := A1 | A2 | A3 | N0..N5 | EMPTY | NAT
///   literal   := ep(p=<num>; prefix=0b<bits>; tail={<num>,...})
///                (fields optional, any order, each at most once)
///   finite    := {<num>, <num>, ...}   (possibly empty)
///   call      := complement(e) | union(e, e) | intersect(e, e) | symdiff(e, e)
/// Throws StructuralError with a position on malformed input.
EPSet parse_epexpr(const std::string& text);

}  // namespace odplab
