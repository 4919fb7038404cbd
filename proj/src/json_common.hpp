#pragma once

// Shared JSON encoders/decoders for value types that appear in more than one
// file format (.case.json, risk configs, hazard specs, hazard log stores).
// All decoders throw Error(SchemaError) on malformed input.

#include <json.hpp>

#include "caseforge/argument.hpp"
#include "caseforge/risk.hpp"

namespace caseforge::detail {

using Json = nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& message) {
    throw Error(ErrorCode::SchemaError, message);
}

inline std::string require_string(const Json& obj, const char* key, const char* where) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        schema_error(std::string(where) + " requires string field '" + key + "'");
    }
    return obj[key].get<std::string>();
}

Json evidence_to_json(const EvidenceRef& evidence);
EvidenceRef evidence_from_json(const Json& value, const char* where);

Json risk_record_to_json(const RiskRecord& record);
RiskRecord risk_record_from_json(const Json& value, const char* where);

Json measure_to_json(const RiskReductionMeasure& measure);
RiskReductionMeasure measure_from_json(const Json& value, const char* where);

/// Probabilities rendered with up to 12 significant digits, shortest form.
std::string format_probability(double p);

} // namespace caseforge::detail
