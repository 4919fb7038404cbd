#pragma once

#include <string>

#include "caseforge/argument.hpp"

namespace caseforge {

/// Schema version stamped into every .case.json document.
inline constexpr const char* kCaseSchemaVersion = "caseforge/1";

/// Canonical JSON interchange form: object keys sorted, nodes sorted by id,
/// edges sorted by (kind, from, to), no insignificant whitespace. Equal
/// graphs serialize to identical bytes.
std::string serialize_canonical(const ArgumentGraph& graph);

/// Loads a .case.json document. The version field is mandatory and checked.
/// Throws Error(SchemaError) on malformed input.
ArgumentGraph load_case_json(const std::string& json_text);

} // namespace caseforge
