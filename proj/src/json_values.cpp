#include "json_common.hpp"

namespace caseforge::detail {

Json risk_record_to_json(const RiskRecord& record) {
    Json out;
    out["likelihood"] = std::string(likelihood_name(record.likelihood));
    out["severity"] = std::string(severity_name_of(record.severity));
    out["zone"] = std::string(risk_zone_name(record.zone));
    if (!record.note.empty()) {
        out["note"] = record.note;
    }
    return out;
}

RiskRecord risk_record_from_json(const Json& value, const char* where) {
    if (!value.is_object()) {
        schema_error(std::string(where) + ": risk record must be an object");
    }
    for (const auto& [key, _] : value.items()) {
        if (key != "likelihood" && key != "severity" && key != "zone" && key != "note") {
            schema_error(std::string(where) + ": unknown risk record field '" + key + "'");
        }
    }
    RiskRecord record;
    auto likelihood = likelihood_from_name(require_string(value, "likelihood", where));
    if (!likelihood) {
        schema_error(std::string(where) + ": unknown likelihood level");
    }
    record.likelihood = *likelihood;
    auto severity = severity_from_name(require_string(value, "severity", where));
    if (!severity) {
        schema_error(std::string(where) + ": unknown severity level");
    }
    record.severity = *severity;
    auto zone = risk_zone_from_name(require_string(value, "zone", where));
    if (!zone) {
        schema_error(std::string(where) + ": unknown risk zone");
    }
    record.zone = *zone;
    if (value.contains("note")) {
        if (!value["note"].is_string()) {
            schema_error(std::string(where) + ": 'note' must be a string");
        }
        record.note = value["note"].get<std::string>();
    }
    return record;
}

Json measure_to_json(const RiskReductionMeasure& measure) {
    Json out;
    out["id"] = measure.id;
    out["kind"] = std::string(measure_kind_name(measure.kind));
    out["phase"] = std::string(lifecycle_phase_name(measure.phase));
    if (measure.likelihood_factor) {
        out["likelihood_factor"] = *measure.likelihood_factor;
    }
    if (measure.likelihood_steps != 0) {
        out["likelihood_steps"] = measure.likelihood_steps;
    }
    if (measure.severity_steps != 0) {
        out["severity_steps"] = measure.severity_steps;
    }
    if (!measure.description.empty()) {
        out["description"] = measure.description;
    }
    if (measure.evidence) {
        out["evidence"] = evidence_to_json(*measure.evidence);
    }
    return out;
}

RiskReductionMeasure measure_from_json(const Json& value, const char* where) {
    if (!value.is_object()) {
        schema_error(std::string(where) + ": measure must be an object");
    }
    for (const auto& [key, _] : value.items()) {
        if (key != "id" && key != "kind" && key != "phase" && key != "likelihood_factor" &&
            key != "likelihood_steps" && key != "severity_steps" && key != "description" &&
            key != "evidence") {
            schema_error(std::string(where) + ": unknown measure field '" + key + "'");
        }
    }
    RiskReductionMeasure measure;
    measure.id = require_string(value, "id", where);
    auto kind = measure_kind_from_name(require_string(value, "kind", where));
    if (!kind) {
        schema_error(std::string(where) + ": unknown measure kind (expected Eliminate, "
                                          "ModifyDesignOrOperation or ReduceSeverity)");
    }
    measure.kind = *kind;
    auto phase = lifecycle_phase_from_name(require_string(value, "phase", where));
    if (!phase) {
        schema_error(std::string(where) + ": unknown lifecycle phase on measure '" +
                     measure.id + "'");
    }
    measure.phase = *phase;
    if (value.contains("likelihood_factor")) {
        if (!value["likelihood_factor"].is_number()) {
            schema_error(std::string(where) + ": 'likelihood_factor' must be a number");
        }
        measure.likelihood_factor = value["likelihood_factor"].get<double>();
    }
    if (value.contains("likelihood_steps")) {
        if (!value["likelihood_steps"].is_number_integer()) {
            schema_error(std::string(where) + ": 'likelihood_steps' must be an integer");
        }
        measure.likelihood_steps = value["likelihood_steps"].get<int>();
    }
    if (value.contains("severity_steps")) {
        if (!value["severity_steps"].is_number_integer()) {
            schema_error(std::string(where) + ": 'severity_steps' must be an integer");
        }
        measure.severity_steps = value["severity_steps"].get<int>();
    }
    if (value.contains("description")) {
        if (!value["description"].is_string()) {
            schema_error(std::string(where) + ": 'description' must be a string");
        }
        measure.description = value["description"].get<std::string>();
    }
    if (value.contains("evidence")) {
        measure.evidence = evidence_from_json(value["evidence"], where);
    }
    return measure;
}

} // namespace caseforge::detail
