#pragma once

// Shared generators and brute-force oracles for property tests. The oracles
// deliberately avoid the library's traversal code: reachability is computed
// by exhaustive path enumeration, cycles by simple-path search.

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "caseforge/argument.hpp"
#include "caseforge/dsl.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline caseforge::ArgumentGraph load_gsn(const std::string& path) {
    caseforge::ParseResult result = caseforge::parse(read_file(path));
    if (!result.ok()) {
        throw std::runtime_error("fixture failed to parse: " + path + " (" +
                                 result.errors.front().message + ")");
    }
    return std::move(*result.graph);
}

struct Rng {
    explicit Rng(unsigned seed) : engine(seed) {}

    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(engine); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine) < p; }
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }

    std::mt19937 engine;
};

// ---------------------------------------------------------------- oracles

/// Reachability over SupportedBy edges by exhaustive simple-path enumeration.
inline void enumerate_paths(const caseforge::ArgumentGraph& graph, const std::string& current,
                            std::set<std::string>& on_path, std::set<std::string>& reached) {
    reached.insert(current);
    for (const auto& edge : graph.edges()) {
        if (edge.kind != caseforge::EdgeKind::SupportedBy || edge.from != current) {
            continue;
        }
        if (on_path.count(edge.to)) {
            continue; // simple paths only; keeps enumeration finite on cycles
        }
        on_path.insert(edge.to);
        enumerate_paths(graph, edge.to, on_path, reached);
        on_path.erase(edge.to);
    }
}

inline std::set<std::string> brute_force_closure(const caseforge::ArgumentGraph& graph,
                                                 const std::string& start) {
    std::set<std::string> reached;
    std::set<std::string> on_path{start};
    enumerate_paths(graph, start, on_path, reached);
    return reached;
}

/// True when some node has a simple SupportedBy path back to itself.
inline bool brute_force_has_cycle(const caseforge::ArgumentGraph& graph) {
    for (const auto& node : graph.nodes()) {
        for (const auto& edge : graph.edges()) {
            if (edge.kind != caseforge::EdgeKind::SupportedBy || edge.from != node.id) {
                continue;
            }
            std::set<std::string> reached = brute_force_closure(graph, edge.to);
            if (reached.count(node.id)) {
                return true;
            }
        }
    }
    return false;
}

// ------------------------------------------------------------- generators

/// Random DAG of Goal nodes: edges only run from lower to higher index, so
/// the SupportedBy relation is acyclic by construction.
inline caseforge::ArgumentGraph random_goal_dag(Rng& rng, int max_nodes) {
    int count = 1 + rng.below(max_nodes);
    std::vector<caseforge::ArgumentNode> nodes;
    for (int i = 0; i < count; ++i) {
        caseforge::ArgumentNode node;
        node.id = "N" + std::to_string(i);
        node.kind = caseforge::NodeKind::Goal;
        node.statement = "goal " + std::to_string(i);
        node.flags.undeveloped = true; // keeps structural noise out of these tests
        nodes.push_back(std::move(node));
    }
    std::set<std::pair<int, int>> used;
    std::vector<caseforge::ArgumentEdge> edges;
    int attempts = count * 3;
    for (int k = 0; k < attempts; ++k) {
        int a = rng.below(count);
        int b = rng.below(count);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!used.emplace(a, b).second) continue;
        caseforge::ArgumentEdge edge;
        edge.kind = caseforge::EdgeKind::SupportedBy;
        edge.from = "N" + std::to_string(a);
        edge.to = "N" + std::to_string(b);
        edges.push_back(std::move(edge));
    }
    return caseforge::build_graph({}, std::move(nodes), std::move(edges));
}

/// Random digraph (cycles allowed) for cycle-detection soundness tests.
inline caseforge::ArgumentGraph random_digraph(Rng& rng, int max_nodes) {
    int count = 2 + rng.below(max_nodes - 1);
    std::vector<caseforge::ArgumentNode> nodes;
    for (int i = 0; i < count; ++i) {
        caseforge::ArgumentNode node;
        node.id = "N" + std::to_string(i);
        node.kind = caseforge::NodeKind::Goal;
        node.statement = "goal " + std::to_string(i);
        node.flags.undeveloped = true;
        nodes.push_back(std::move(node));
    }
    std::set<std::pair<int, int>> used;
    std::vector<caseforge::ArgumentEdge> edges;
    int attempts = count * 2;
    for (int k = 0; k < attempts; ++k) {
        int a = rng.below(count);
        int b = rng.below(count);
        if (a == b) continue;
        if (!used.emplace(a, b).second) continue;
        caseforge::ArgumentEdge edge;
        edge.kind = caseforge::EdgeKind::SupportedBy;
        edge.from = "N" + std::to_string(a);
        edge.to = "N" + std::to_string(b);
        edges.push_back(std::move(edge));
    }
    return caseforge::build_graph({}, std::move(nodes), std::move(edges));
}

inline std::string random_statement(Rng& rng) {
    static const char* fragments[] = {
        "the system",  "remains safe", "under load",   "despite faults", "in deployment",
        "with \"quoted\" terms", "and a \\ backslash", "covering {X}",  "at scale",
        "per policy",  "with # marks", "end to end",   "tab\tseparated",
    };
    int words = 1 + rng.below(5);
    std::string out;
    for (int i = 0; i < words; ++i) {
        if (i) out += ' ';
        out += fragments[rng.below(static_cast<int>(std::size(fragments)))];
    }
    return out;
}

/// Random structurally-buildable case with varied kinds, flags, attributes
/// and metadata; not necessarily validator-clean.
inline caseforge::ArgumentGraph random_case(Rng& rng) {
    using namespace caseforge;
    int count = 1 + rng.below(14);
    std::vector<ArgumentNode> nodes;
    std::vector<int> goal_indices;
    for (int i = 0; i < count; ++i) {
        ArgumentNode node;
        node.id = "N" + std::to_string(i);
        int kind_pick = rng.below(10);
        if (kind_pick < 4) node.kind = NodeKind::Goal;
        else if (kind_pick < 6) node.kind = NodeKind::Strategy;
        else if (kind_pick < 8) node.kind = NodeKind::Solution;
        else if (kind_pick == 8) node.kind = NodeKind::Context;
        else node.kind = rng.chance(0.5) ? NodeKind::Assumption : NodeKind::Justification;
        node.statement = random_statement(rng);
        if (node.kind == NodeKind::Goal) goal_indices.push_back(i);
        if (rng.chance(0.2)) node.flags.undeveloped = true;
        if (rng.chance(0.15)) node.flags.uninstantiated = true;
        if ((node.kind == NodeKind::Goal || node.kind == NodeKind::Strategy) &&
            rng.chance(0.3)) {
            node.lifecycle = static_cast<LifecyclePhase>(rng.below(3));
        }
        if (rng.chance(0.2)) {
            ConfidenceAssertion acp;
            acp.level = static_cast<ConfidenceLevel>(rng.below(3));
            acp.label = random_statement(rng);
            node.acp = std::move(acp);
        }
        if (node.kind == NodeKind::Solution && rng.chance(0.7)) {
            EvidenceRef evidence;
            evidence.uri_or_path = "refs/item" + std::to_string(i) + ".md";
            if (rng.chance(0.5)) evidence.description = random_statement(rng);
            if (rng.chance(0.6)) {
                evidence.dated = caseforge::Date{std::chrono::year{2024 + rng.below(2)},
                                                 std::chrono::month{1 + static_cast<unsigned>(
                                                                             rng.below(12))},
                                                 std::chrono::day{1 + static_cast<unsigned>(
                                                                           rng.below(28))}};
                if (rng.chance(0.5)) evidence.valid_for_days = 1 + rng.below(400);
            }
            node.evidence = std::move(evidence);
        }
        nodes.push_back(std::move(node));
    }

    std::set<std::tuple<int, int, int>> used;
    std::vector<ArgumentEdge> edges;
    int attempts = count * 2;
    for (int k = 0; k < attempts; ++k) {
        int a = rng.below(count);
        int b = rng.below(count);
        if (a == b) continue;
        int kind = rng.chance(0.75) ? 0 : 1;
        if (!used.emplace(kind, a, b).second) continue;
        ArgumentEdge edge;
        edge.kind = kind == 0 ? EdgeKind::SupportedBy : EdgeKind::InContextOf;
        edge.from = "N" + std::to_string(a);
        edge.to = "N" + std::to_string(b);
        edges.push_back(std::move(edge));
    }

    CaseMetadata metadata;
    if (rng.chance(0.8)) {
        metadata.system_name = "System " + std::to_string(rng.below(100));
        metadata.case_version = std::to_string(rng.below(4)) + "." + std::to_string(rng.below(10));
        metadata.risk_owner = "Owner " + std::to_string(rng.below(10));
    }
    for (int index : goal_indices) {
        if (rng.chance(0.25)) {
            metadata.hazardous_event_goals.insert("N" + std::to_string(index));
        }
    }
    return build_graph(std::move(metadata), std::move(nodes), std::move(edges));
}

inline std::string cases_dir() { return CASEFORGE_CASES_DIR; }

} // namespace testsupport
