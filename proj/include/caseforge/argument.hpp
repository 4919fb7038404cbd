#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "caseforge/dates.hpp"
#include "caseforge/errors.hpp"

namespace caseforge {

enum class NodeKind {
    Goal,
    Strategy,
    Solution,
    Context,
    Assumption,
    Justification,
};

enum class EdgeKind {
    SupportedBy,
    InContextOf,
};

enum class LifecyclePhase {
    Development,
    Deployment,
    PostDeployment,
};

enum class ConfidenceLevel {
    Low,
    Medium,
    High,
};

std::string_view node_kind_name(NodeKind kind);
std::string_view edge_kind_name(EdgeKind kind);
std::string_view lifecycle_phase_name(LifecyclePhase phase);
std::string_view confidence_level_name(ConfidenceLevel level);

std::optional<NodeKind> node_kind_from_name(const std::string& name);
std::optional<EdgeKind> edge_kind_from_name(const std::string& name);
std::optional<LifecyclePhase> lifecycle_phase_from_name(const std::string& name);
std::optional<ConfidenceLevel> confidence_level_from_name(const std::string& name);

/// Assurance claim point: marks a claim as carrying a confidence assertion.
struct ConfidenceAssertion {
    std::string label;
    ConfidenceLevel level = ConfidenceLevel::Medium;

    bool operator==(const ConfidenceAssertion&) const = default;
};

/// Reference to evidence backing a Solution. Freshness fields are optional;
/// absent means the evidence never goes stale.
struct EvidenceRef {
    std::string uri_or_path;
    std::string description;
    std::optional<Date> dated;
    std::optional<int> valid_for_days; // requires dated when present

    bool operator==(const EvidenceRef&) const = default;
};

struct NodeFlags {
    bool undeveloped = false;
    bool uninstantiated = false;

    bool any() const { return undeveloped || uninstantiated; }
    bool operator==(const NodeFlags&) const = default;
};

struct ArgumentNode {
    std::string id;
    NodeKind kind = NodeKind::Goal;
    std::string statement;
    NodeFlags flags;
    std::optional<LifecyclePhase> lifecycle; // Goal and Strategy nodes only
    std::optional<ConfidenceAssertion> acp;
    std::optional<EvidenceRef> evidence;     // Solution nodes only

    bool operator==(const ArgumentNode&) const = default;
};

struct ArgumentEdge {
    EdgeKind kind = EdgeKind::SupportedBy;
    std::string from; // parent: the supported / contextualised node
    std::string to;   // child: the supporting node or the context

    bool operator==(const ArgumentEdge&) const = default;
};

struct CaseMetadata {
    std::string system_name;
    std::string case_version;
    std::string risk_owner;
    std::set<std::string> hazardous_event_goals; // each id must resolve to a Goal

    bool operator==(const CaseMetadata&) const = default;
};

/// Uninstantiated statements carry placeholder tokens of the form `{name}`.
bool has_placeholder_token(const std::string& statement);

/// Node ids match [A-Za-z][A-Za-z0-9_.-]*.
bool is_valid_node_id(const std::string& id);

/// Immutable GSN argument graph. Built once via build_graph; all queries are
/// pure, so values can be shared freely across threads.
class ArgumentGraph {
public:
    ArgumentGraph() = default;

    const CaseMetadata& metadata() const { return metadata_; }
    const std::vector<ArgumentNode>& nodes() const { return nodes_; }
    const std::vector<ArgumentEdge>& edges() const { return edges_; }

    bool contains(const std::string& id) const;
    const ArgumentNode* find(const std::string& id) const;
    /// Throws UnknownNode.
    const ArgumentNode& at(const std::string& id) const;

    bool empty() const { return nodes_.empty(); }

private:
    friend ArgumentGraph build_graph(CaseMetadata metadata, std::vector<ArgumentNode> nodes,
                                     std::vector<ArgumentEdge> edges);

    CaseMetadata metadata_;
    std::vector<ArgumentNode> nodes_;
    std::vector<ArgumentEdge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Assembles a graph, checking id uniqueness, edge endpoint existence and
/// self-loops (structural legality beyond that is the validator's job).
/// Duplicate (kind, from, to) edge triples collapse to their first occurrence;
/// node and edge insertion order is preserved.
///
/// Throws Error with DuplicateId, DanglingEdge or SelfLoop.
ArgumentGraph build_graph(CaseMetadata metadata, std::vector<ArgumentNode> nodes,
                          std::vector<ArgumentEdge> edges);

/// All nodes reachable from goal_id over SupportedBy edges, goal_id included.
/// Throws UnknownNode / NotAGoal.
std::set<std::string> supported_closure(const ArgumentGraph& graph, const std::string& goal_id);

/// Goal nodes with no incoming SupportedBy edge, in insertion order.
std::vector<std::string> root_goals(const ArgumentGraph& graph);

struct FrontierEntry {
    std::string id;
    bool undeveloped = false;          // explicit flag
    bool uninstantiated = false;       // explicit flag
    bool implicit_undeveloped = false; // unflagged Goal with no outgoing SupportedBy

    bool operator==(const FrontierEntry&) const = default;
};

/// Nodes still awaiting development: everything carrying Undeveloped or
/// Uninstantiated flags, plus Goals that are silently unsupported.
std::vector<FrontierEntry> developmental_frontier(const ArgumentGraph& graph);

} // namespace caseforge
