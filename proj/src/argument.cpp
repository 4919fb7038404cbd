#include "caseforge/argument.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace caseforge {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::NotAGoal: return "NotAGoal";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::CannotRemoveRoot: return "CannotRemoveRoot";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::BandsUnconfigured: return "BandsUnconfigured";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MissingProbability: return "MissingProbability";
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::DuplicateHazardId: return "DuplicateHazardId";
    case ErrorCode::UnknownGoal: return "UnknownGoal";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::IllegalTransition: return "IllegalTransition";
    case ErrorCode::WrongOwner: return "WrongOwner";
    case ErrorCode::NothingToAccept: return "NothingToAccept";
    case ErrorCode::ConflictingRevision: return "ConflictingRevision";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Error";
}

std::string_view node_kind_name(NodeKind kind) {
    switch (kind) {
    case NodeKind::Goal: return "Goal";
    case NodeKind::Strategy: return "Strategy";
    case NodeKind::Solution: return "Solution";
    case NodeKind::Context: return "Context";
    case NodeKind::Assumption: return "Assumption";
    case NodeKind::Justification: return "Justification";
    }
    return "Goal";
}

std::string_view edge_kind_name(EdgeKind kind) {
    return kind == EdgeKind::SupportedBy ? "SupportedBy" : "InContextOf";
}

std::string_view lifecycle_phase_name(LifecyclePhase phase) {
    switch (phase) {
    case LifecyclePhase::Development: return "Development";
    case LifecyclePhase::Deployment: return "Deployment";
    case LifecyclePhase::PostDeployment: return "PostDeployment";
    }
    return "Development";
}

std::string_view confidence_level_name(ConfidenceLevel level) {
    switch (level) {
    case ConfidenceLevel::Low: return "Low";
    case ConfidenceLevel::Medium: return "Medium";
    case ConfidenceLevel::High: return "High";
    }
    return "Medium";
}

std::optional<NodeKind> node_kind_from_name(const std::string& name) {
    static const std::pair<const char*, NodeKind> table[] = {
        {"Goal", NodeKind::Goal},       {"Strategy", NodeKind::Strategy},
        {"Solution", NodeKind::Solution}, {"Context", NodeKind::Context},
        {"Assumption", NodeKind::Assumption}, {"Justification", NodeKind::Justification},
    };
    for (const auto& [n, k] : table) {
        if (name == n) return k;
    }
    return std::nullopt;
}

std::optional<EdgeKind> edge_kind_from_name(const std::string& name) {
    if (name == "SupportedBy") return EdgeKind::SupportedBy;
    if (name == "InContextOf") return EdgeKind::InContextOf;
    return std::nullopt;
}

std::optional<LifecyclePhase> lifecycle_phase_from_name(const std::string& name) {
    if (name == "Development") return LifecyclePhase::Development;
    if (name == "Deployment") return LifecyclePhase::Deployment;
    if (name == "PostDeployment") return LifecyclePhase::PostDeployment;
    return std::nullopt;
}

std::optional<ConfidenceLevel> confidence_level_from_name(const std::string& name) {
    if (name == "Low") return ConfidenceLevel::Low;
    if (name == "Medium") return ConfidenceLevel::Medium;
    if (name == "High") return ConfidenceLevel::High;
    return std::nullopt;
}

bool has_placeholder_token(const std::string& statement) {
    std::size_t open = statement.find('{');
    while (open != std::string::npos) {
        std::size_t close = statement.find('}', open + 1);
        if (close == std::string::npos) {
            return false;
        }
        // no nested opens inside the candidate token
        if (statement.find('{', open + 1) > close) {
            return true;
        }
        open = statement.find('{', open + 1);
    }
    return false;
}

bool is_valid_node_id(const std::string& id) {
    if (id.empty()) return false;
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(id[0])) return false;
    return std::all_of(id.begin() + 1, id.end(), [&](char c) {
        return alpha(c) || digit(c) || c == '_' || c == '.' || c == '-';
    });
}

bool ArgumentGraph::contains(const std::string& id) const {
    return index_.count(id) != 0;
}

const ArgumentNode* ArgumentGraph::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &nodes_[it->second];
}

const ArgumentNode& ArgumentGraph::at(const std::string& id) const {
    const ArgumentNode* node = find(id);
    if (!node) {
        throw Error(ErrorCode::UnknownNode, "no node with id '" + id + "'");
    }
    return *node;
}

ArgumentGraph build_graph(CaseMetadata metadata, std::vector<ArgumentNode> nodes,
                          std::vector<ArgumentEdge> edges) {
    ArgumentGraph graph;
    graph.nodes_.reserve(nodes.size());
    for (auto& node : nodes) {
        if (node.id.empty()) {
            throw Error(ErrorCode::DuplicateId, "empty node id");
        }
        auto [it, inserted] = graph.index_.emplace(node.id, graph.nodes_.size());
        if (!inserted) {
            throw Error(ErrorCode::DuplicateId, "duplicate node id '" + node.id + "'");
        }
        graph.nodes_.push_back(std::move(node));
    }

    std::set<std::tuple<EdgeKind, std::string, std::string>> seen;
    graph.edges_.reserve(edges.size());
    for (auto& edge : edges) {
        if (edge.from == edge.to) {
            throw Error(ErrorCode::SelfLoop, "edge from '" + edge.from + "' to itself");
        }
        if (!graph.index_.count(edge.from)) {
            throw Error(ErrorCode::DanglingEdge,
                        "edge references unknown node '" + edge.from + "'");
        }
        if (!graph.index_.count(edge.to)) {
            throw Error(ErrorCode::DanglingEdge, "edge references unknown node '" + edge.to + "'");
        }
        if (!seen.emplace(edge.kind, edge.from, edge.to).second) {
            continue; // duplicate triple, keep first occurrence
        }
        graph.edges_.push_back(std::move(edge));
    }

    for (const auto& goal_id : metadata.hazardous_event_goals) {
        auto it = graph.index_.find(goal_id);
        if (it == graph.index_.end()) {
            throw Error(ErrorCode::DanglingEdge,
                        "hazardous-event goal '" + goal_id + "' is not a node");
        }
        if (graph.nodes_[it->second].kind != NodeKind::Goal) {
            throw Error(ErrorCode::DanglingEdge,
                        "hazardous-event id '" + goal_id + "' does not name a Goal");
        }
    }

    graph.metadata_ = std::move(metadata);
    return graph;
}

std::set<std::string> supported_closure(const ArgumentGraph& graph, const std::string& goal_id) {
    const ArgumentNode& start = graph.at(goal_id);
    if (start.kind != NodeKind::Goal) {
        throw Error(ErrorCode::NotAGoal, "'" + goal_id + "' is a " +
                                             std::string(node_kind_name(start.kind)) +
                                             ", not a Goal");
    }
    std::set<std::string> closure;
    std::deque<std::string> frontier{goal_id};
    closure.insert(goal_id);
    while (!frontier.empty()) {
        std::string current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& edge : graph.edges()) {
            if (edge.kind == EdgeKind::SupportedBy && edge.from == current &&
                closure.insert(edge.to).second) {
                frontier.push_back(edge.to);
            }
        }
    }
    return closure;
}

std::vector<std::string> root_goals(const ArgumentGraph& graph) {
    std::set<std::string> supported_targets;
    for (const auto& edge : graph.edges()) {
        if (edge.kind == EdgeKind::SupportedBy) {
            supported_targets.insert(edge.to);
        }
    }
    std::vector<std::string> roots;
    for (const auto& node : graph.nodes()) {
        if (node.kind == NodeKind::Goal && !supported_targets.count(node.id)) {
            roots.push_back(node.id);
        }
    }
    return roots;
}

std::vector<FrontierEntry> developmental_frontier(const ArgumentGraph& graph) {
    std::set<std::string> has_outgoing_support;
    for (const auto& edge : graph.edges()) {
        if (edge.kind == EdgeKind::SupportedBy) {
            has_outgoing_support.insert(edge.from);
        }
    }
    std::vector<FrontierEntry> frontier;
    for (const auto& node : graph.nodes()) {
        FrontierEntry entry;
        entry.id = node.id;
        entry.undeveloped = node.flags.undeveloped;
        entry.uninstantiated = node.flags.uninstantiated;
        entry.implicit_undeveloped = node.kind == NodeKind::Goal && !node.flags.undeveloped &&
                                     !has_outgoing_support.count(node.id);
        if (entry.undeveloped || entry.uninstantiated || entry.implicit_undeveloped) {
            frontier.push_back(std::move(entry));
        }
    }
    return frontier;
}

} // namespace caseforge
