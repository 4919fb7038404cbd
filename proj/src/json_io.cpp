#include <algorithm>
#include <cstdio>

#include "caseforge/case_json.hpp"
#include "json_common.hpp"

namespace caseforge::detail {

Json evidence_to_json(const EvidenceRef& evidence) {
    Json out;
    out["uri"] = evidence.uri_or_path;
    if (!evidence.description.empty()) {
        out["description"] = evidence.description;
    }
    if (evidence.dated) {
        out["dated"] = format_date(*evidence.dated);
    }
    if (evidence.valid_for_days) {
        out["valid_for_days"] = *evidence.valid_for_days;
    }
    return out;
}

EvidenceRef evidence_from_json(const Json& value, const char* where) {
    if (!value.is_object()) {
        schema_error(std::string(where) + ": evidence must be an object");
    }
    EvidenceRef evidence;
    for (const auto& [key, _] : value.items()) {
        if (key != "uri" && key != "description" && key != "dated" && key != "valid_for_days") {
            schema_error(std::string(where) + ": unknown evidence field '" + key + "'");
        }
    }
    evidence.uri_or_path = require_string(value, "uri", where);
    if (value.contains("description")) {
        if (!value["description"].is_string()) {
            schema_error(std::string(where) + ": evidence description must be a string");
        }
        evidence.description = value["description"].get<std::string>();
    }
    if (value.contains("dated")) {
        auto date = parse_date(require_string(value, "dated", where));
        if (!date) {
            schema_error(std::string(where) + ": evidence 'dated' must be YYYY-MM-DD");
        }
        evidence.dated = *date;
    }
    if (value.contains("valid_for_days")) {
        if (!value["valid_for_days"].is_number_integer() ||
            value["valid_for_days"].get<int>() <= 0) {
            schema_error(std::string(where) + ": 'valid_for_days' must be a positive integer");
        }
        if (!evidence.dated) {
            schema_error(std::string(where) + ": 'valid_for_days' requires 'dated'");
        }
        evidence.valid_for_days = value["valid_for_days"].get<int>();
    }
    return evidence;
}

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", p);
    return buf;
}

namespace {

Json node_to_json(const ArgumentNode& node) {
    Json out;
    out["id"] = node.id;
    out["kind"] = std::string(node_kind_name(node.kind));
    out["statement"] = node.statement;
    if (node.flags.any()) {
        Json flags = Json::array();
        if (node.flags.undeveloped) flags.push_back("Undeveloped");
        if (node.flags.uninstantiated) flags.push_back("Uninstantiated");
        out["flags"] = std::move(flags);
    }
    if (node.lifecycle) {
        out["lifecycle"] = std::string(lifecycle_phase_name(*node.lifecycle));
    }
    if (node.acp) {
        Json acp;
        acp["label"] = node.acp->label;
        acp["level"] = std::string(confidence_level_name(node.acp->level));
        out["acp"] = std::move(acp);
    }
    if (node.evidence) {
        out["evidence"] = evidence_to_json(*node.evidence);
    }
    return out;
}

ArgumentNode node_from_json(const Json& value) {
    if (!value.is_object()) {
        schema_error("node entries must be objects");
    }
    for (const auto& [key, _] : value.items()) {
        if (key != "id" && key != "kind" && key != "statement" && key != "flags" &&
            key != "lifecycle" && key != "acp" && key != "evidence") {
            schema_error("unknown node field '" + key + "'");
        }
    }
    ArgumentNode node;
    node.id = require_string(value, "id", "node");
    auto kind = node_kind_from_name(require_string(value, "kind", "node"));
    if (!kind) {
        schema_error("unknown node kind for '" + node.id + "'");
    }
    node.kind = *kind;
    node.statement = require_string(value, "statement", "node");
    if (value.contains("flags")) {
        if (!value["flags"].is_array()) {
            schema_error("node 'flags' must be an array");
        }
        for (const auto& flag : value["flags"]) {
            if (flag == "Undeveloped") node.flags.undeveloped = true;
            else if (flag == "Uninstantiated") node.flags.uninstantiated = true;
            else schema_error("unknown node flag " + flag.dump());
        }
    }
    if (value.contains("lifecycle")) {
        auto phase = lifecycle_phase_from_name(require_string(value, "lifecycle", "node"));
        if (!phase) {
            schema_error("unknown lifecycle phase on node '" + node.id + "'");
        }
        node.lifecycle = *phase;
    }
    if (value.contains("acp")) {
        const Json& acp = value["acp"];
        if (!acp.is_object()) {
            schema_error("node 'acp' must be an object");
        }
        ConfidenceAssertion assertion;
        assertion.label = require_string(acp, "label", "acp");
        auto level = confidence_level_from_name(require_string(acp, "level", "acp"));
        if (!level) {
            schema_error("unknown acp level on node '" + node.id + "'");
        }
        assertion.level = *level;
        node.acp = std::move(assertion);
    }
    if (value.contains("evidence")) {
        node.evidence = evidence_from_json(value["evidence"], "node");
    }
    return node;
}

} // namespace
} // namespace caseforge::detail

namespace caseforge {

using detail::Json;
using detail::schema_error;

std::string serialize_canonical(const ArgumentGraph& graph) {
    Json out;
    out["version"] = kCaseSchemaVersion;

    Json metadata;
    metadata["system_name"] = graph.metadata().system_name;
    metadata["case_version"] = graph.metadata().case_version;
    metadata["risk_owner"] = graph.metadata().risk_owner;
    metadata["hazardous_event_goals"] =
        Json(graph.metadata().hazardous_event_goals); // std::set, already sorted
    out["metadata"] = std::move(metadata);

    std::vector<const ArgumentNode*> nodes;
    nodes.reserve(graph.nodes().size());
    for (const auto& node : graph.nodes()) {
        nodes.push_back(&node);
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const ArgumentNode* a, const ArgumentNode* b) { return a->id < b->id; });
    Json node_array = Json::array();
    for (const ArgumentNode* node : nodes) {
        node_array.push_back(detail::node_to_json(*node));
    }
    out["nodes"] = std::move(node_array);

    std::vector<ArgumentEdge> edges = graph.edges();
    std::sort(edges.begin(), edges.end(), [](const ArgumentEdge& a, const ArgumentEdge& b) {
        return std::tuple(edge_kind_name(a.kind), a.from, a.to) <
               std::tuple(edge_kind_name(b.kind), b.from, b.to);
    });
    Json edge_array = Json::array();
    for (const auto& edge : edges) {
        Json entry;
        entry["kind"] = std::string(edge_kind_name(edge.kind));
        entry["from"] = edge.from;
        entry["to"] = edge.to;
        edge_array.push_back(std::move(entry));
    }
    out["edges"] = std::move(edge_array);

    return out.dump();
}

ArgumentGraph load_case_json(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        schema_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_error("case document must be a JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (key != "version" && key != "metadata" && key != "nodes" && key != "edges") {
            schema_error("unknown case field '" + key + "'");
        }
    }
    std::string version = detail::require_string(doc, "version", "case document");
    if (version != kCaseSchemaVersion) {
        schema_error("unsupported schema version '" + version + "' (expected " +
                     kCaseSchemaVersion + ")");
    }

    CaseMetadata metadata;
    if (doc.contains("metadata")) {
        const Json& meta = doc["metadata"];
        if (!meta.is_object()) {
            schema_error("'metadata' must be an object");
        }
        for (const auto& [key, _] : meta.items()) {
            if (key != "system_name" && key != "case_version" && key != "risk_owner" &&
                key != "hazardous_event_goals") {
                schema_error("unknown metadata field '" + key + "'");
            }
        }
        if (meta.contains("system_name"))
            metadata.system_name = detail::require_string(meta, "system_name", "metadata");
        if (meta.contains("case_version"))
            metadata.case_version = detail::require_string(meta, "case_version", "metadata");
        if (meta.contains("risk_owner"))
            metadata.risk_owner = detail::require_string(meta, "risk_owner", "metadata");
        if (meta.contains("hazardous_event_goals")) {
            if (!meta["hazardous_event_goals"].is_array()) {
                schema_error("'hazardous_event_goals' must be an array");
            }
            for (const auto& id : meta["hazardous_event_goals"]) {
                if (!id.is_string()) {
                    schema_error("'hazardous_event_goals' entries must be strings");
                }
                metadata.hazardous_event_goals.insert(id.get<std::string>());
            }
        }
    }

    std::vector<ArgumentNode> nodes;
    if (doc.contains("nodes")) {
        if (!doc["nodes"].is_array()) {
            schema_error("'nodes' must be an array");
        }
        for (const auto& entry : doc["nodes"]) {
            nodes.push_back(detail::node_from_json(entry));
        }
    }

    std::vector<ArgumentEdge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) {
            schema_error("'edges' must be an array");
        }
        for (const auto& entry : doc["edges"]) {
            if (!entry.is_object()) {
                schema_error("edge entries must be objects");
            }
            for (const auto& [key, _] : entry.items()) {
                if (key != "kind" && key != "from" && key != "to") {
                    schema_error("unknown edge field '" + key + "'");
                }
            }
            ArgumentEdge edge;
            auto kind = edge_kind_from_name(detail::require_string(entry, "kind", "edge"));
            if (!kind) {
                schema_error("unknown edge kind");
            }
            edge.kind = *kind;
            edge.from = detail::require_string(entry, "from", "edge");
            edge.to = detail::require_string(entry, "to", "edge");
            edges.push_back(std::move(edge));
        }
    }

    try {
        return build_graph(std::move(metadata), std::move(nodes), std::move(edges));
    } catch (const Error& e) {
        schema_error(e.what());
    }
}

} // namespace caseforge
