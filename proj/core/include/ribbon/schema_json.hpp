#pragma once

#include <string>
#include <string_view>

#include "ribbon/schema.hpp"

namespace ribbon {

inline constexpr int kSchemaVersion = 1;

// Versioned JSON document: schema_version, meta, blocks[], gluings[], summary.
// Reals carry 12 significant digits; symbolic lengths are written "sym:<label>".
std::string schema_to_json(const SurfaceSchema& schema);

// Throws Error(Parse) for malformed documents or unknown versions.
SurfaceSchema schema_from_json(std::string_view text);

// Rounds to 12 significant digits, the precision used in schema files.
double round_to_schema_precision(double x);

}  // namespace ribbon
