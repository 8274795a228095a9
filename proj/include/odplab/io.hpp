#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "odplab/construct.hpp"

namespace odplab {

/// Parsed structure file. Delta is optional in the "odp v1" format; the
/// "family v1" format always induces one.
struct ParsedInstance {
  FinOrthoPoset poset;
  std::optional<DeltaTable> delta;
};

/// Read either format ("odp v1" or "family v1"). Parse problems throw
/// StructuralError with a line reference.
ParsedInstance read_instance(std::istream& in);
ParsedInstance read_instance_text(const std::string& text);

/// Canonical "odp v1" emission: leq matrix, perp line, delta block and
/// labels when present. Byte-stable for a given instance.
void write_instance(std::ostream& out, const FinOrthoPoset& p,
                    const DeltaTable* d);
std::string instance_text(const FinOrthoPoset& p, const DeltaTable* d);

}  // namespace odplab
