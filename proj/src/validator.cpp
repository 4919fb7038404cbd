#include "caseforge/validator.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace caseforge {

namespace {

int severity_rank(Severity severity) {
    switch (severity) {
    case Severity::Error: return 0;
    case Severity::Warning: return 1;
    case Severity::Info: return 2;
    }
    return 2;
}

struct Adjacency {
    // node id -> supporting children (SupportedBy edge targets), edge order
    std::map<std::string, std::vector<std::string>> support;
    // node id -> attached contexts (InContextOf edge targets), edge order
    std::map<std::string, std::vector<std::string>> context;

    explicit Adjacency(const ArgumentGraph& graph) {
        for (const auto& edge : graph.edges()) {
            if (edge.kind == EdgeKind::SupportedBy) {
                support[edge.from].push_back(edge.to);
            } else {
                context[edge.from].push_back(edge.to);
            }
        }
    }

    const std::vector<std::string>& support_of(const std::string& id) const {
        static const std::vector<std::string> empty;
        auto it = support.find(id);
        return it == support.end() ? empty : it->second;
    }

    const std::vector<std::string>& context_of(const std::string& id) const {
        static const std::vector<std::string> empty;
        auto it = context.find(id);
        return it == context.end() ? empty : it->second;
    }
};

/// First cycle found in the SupportedBy relation (node ids, sorted), or
/// empty when acyclic.
std::vector<std::string> find_support_cycle(const ArgumentGraph& graph, const Adjacency& adj) {
    enum class Color { White, Grey, Black };
    std::map<std::string, Color> color;
    for (const auto& node : graph.nodes()) {
        color[node.id] = Color::White;
    }
    std::vector<std::string> stack;
    std::vector<std::string> cycle;

    std::function<bool(const std::string&)> visit = [&](const std::string& id) {
        color[id] = Color::Grey;
        stack.push_back(id);
        for (const auto& child : adj.support_of(id)) {
            if (color[child] == Color::Grey) {
                auto start = std::find(stack.begin(), stack.end(), child);
                cycle.assign(start, stack.end());
                return true;
            }
            if (color[child] == Color::White && visit(child)) {
                return true;
            }
        }
        stack.pop_back();
        color[id] = Color::Black;
        return false;
    };

    for (const auto& node : graph.nodes()) {
        if (color[node.id] == Color::White && visit(node.id)) {
            std::sort(cycle.begin(), cycle.end());
            return cycle;
        }
    }
    return {};
}

/// Reachability over both edge kinds from the given seed nodes.
std::set<std::string> reachable_from(const ArgumentGraph& graph, const Adjacency& adj,
                                     const std::vector<std::string>& seeds) {
    std::set<std::string> reached;
    std::deque<std::string> frontier;
    for (const auto& seed : seeds) {
        if (graph.contains(seed) && reached.insert(seed).second) {
            frontier.push_back(seed);
        }
    }
    while (!frontier.empty()) {
        std::string current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& child : adj.support_of(current)) {
            if (reached.insert(child).second) frontier.push_back(child);
        }
        for (const auto& child : adj.context_of(current)) {
            if (reached.insert(child).second) frontier.push_back(child);
        }
    }
    return reached;
}

/// 1-based depth from the nearest root over SupportedBy edges.
std::map<std::string, int> support_depths(const ArgumentGraph& graph, const Adjacency& adj) {
    std::map<std::string, int> depth;
    std::deque<std::string> frontier;
    for (const auto& root : root_goals(graph)) {
        depth[root] = 1;
        frontier.push_back(root);
    }
    while (!frontier.empty()) {
        std::string current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& child : adj.support_of(current)) {
            if (!depth.count(child)) {
                depth[child] = depth[current] + 1;
                frontier.push_back(child);
            }
        }
    }
    return depth;
}

bool legal_supported_by(NodeKind from, NodeKind to) {
    if (from == NodeKind::Goal) {
        return to == NodeKind::Goal || to == NodeKind::Strategy || to == NodeKind::Solution;
    }
    if (from == NodeKind::Strategy) {
        return to == NodeKind::Goal;
    }
    return false;
}

bool legal_in_context_of(NodeKind from, NodeKind to) {
    bool from_ok = from == NodeKind::Goal || from == NodeKind::Strategy;
    bool to_ok = to == NodeKind::Context || to == NodeKind::Assumption ||
                 to == NodeKind::Justification;
    return from_ok && to_ok;
}

Diagnostic make(Severity severity, std::string code, std::vector<std::string> nodes,
                std::string message) {
    return Diagnostic{severity, std::move(code), std::move(nodes), std::move(message)};
}

/// Phase buckets for one hazardous-event goal. Untagged Goal/Strategy nodes
/// inherit the nearest tagged ancestor's phase along the traversal.
std::map<LifecyclePhase, std::set<std::string>> phase_buckets(const ArgumentGraph& graph,
                                                              const Adjacency& adj,
                                                              const std::string& hazard_goal) {
    std::map<LifecyclePhase, std::set<std::string>> buckets;
    // visited (node, inherited-phase) pairs; -1 encodes "no phase yet"
    std::set<std::pair<std::string, int>> seen;
    std::deque<std::pair<std::string, int>> frontier;

    auto effective = [&](const std::string& id, int inherited) {
        const ArgumentNode* node = graph.find(id);
        if (node && node->lifecycle) {
            return static_cast<int>(*node->lifecycle);
        }
        return inherited;
    };

    int start_phase = effective(hazard_goal, -1);
    frontier.emplace_back(hazard_goal, start_phase);
    seen.emplace(hazard_goal, start_phase);
    while (!frontier.empty()) {
        auto [id, phase] = frontier.front();
        frontier.pop_front();
        const ArgumentNode* node = graph.find(id);
        if (node && phase >= 0 &&
            (node->kind == NodeKind::Goal || node->kind == NodeKind::Strategy)) {
            buckets[static_cast<LifecyclePhase>(phase)].insert(id);
        }
        for (const auto& child : adj.support_of(id)) {
            int child_phase = effective(child, phase);
            if (seen.emplace(child, child_phase).second) {
                frontier.emplace_back(child, child_phase);
            }
        }
    }
    return buckets;
}

CoverageReport compute_coverage(const ArgumentGraph& graph,
                                const std::set<LifecyclePhase>& required_phases) {
    Adjacency adj(graph);
    CoverageReport report;
    for (const auto& goal_id : graph.metadata().hazardous_event_goals) {
        auto buckets = phase_buckets(graph, adj, goal_id);
        auto& per_goal = report.buckets[goal_id];
        for (const auto& [phase, ids] : buckets) {
            per_goal[phase] = std::vector<std::string>(ids.begin(), ids.end());
        }
        for (const auto& phase : required_phases) {
            auto it = buckets.find(phase);
            if (it == buckets.end() || it->second.empty()) {
                report.missing.emplace(goal_id, phase);
                report.diagnostics.push_back(make(
                    Severity::Error, "COV01", {goal_id},
                    "hazardous-event goal '" + goal_id + "' has no " +
                        std::string(lifecycle_phase_name(phase)) + " coverage"));
                continue;
            }
            bool all_undeveloped = true;
            for (const auto& id : it->second) {
                const ArgumentNode* node = graph.find(id);
                if (node && !node->flags.undeveloped) {
                    all_undeveloped = false;
                    break;
                }
            }
            if (all_undeveloped) {
                std::vector<std::string> nodes{goal_id};
                nodes.insert(nodes.end(), it->second.begin(), it->second.end());
                report.diagnostics.push_back(make(
                    Severity::Warning, "COV02", std::move(nodes),
                    "all " + std::string(lifecycle_phase_name(phase)) + " support under '" +
                        goal_id + "' is undeveloped"));
            }
        }
    }
    sort_diagnostics(report.diagnostics);
    return report;
}

std::set<std::string> implicit_undeveloped_ids(const ArgumentGraph& graph) {
    std::set<std::string> ids;
    for (const auto& entry : developmental_frontier(graph)) {
        if (entry.implicit_undeveloped) {
            ids.insert(entry.id);
        }
    }
    return ids;
}

} // namespace

std::string_view severity_name(Severity severity) {
    switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
    }
    return "info";
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
    std::sort(diagnostics.begin(), diagnostics.end(),
              [](const Diagnostic& a, const Diagnostic& b) {
                  const std::string empty;
                  const std::string& a_node = a.nodes.empty() ? empty : a.nodes.front();
                  const std::string& b_node = b.nodes.empty() ? empty : b.nodes.front();
                  return std::tuple(severity_rank(a.severity), std::cref(a.code),
                                    std::cref(a_node), std::cref(a.message)) <
                         std::tuple(severity_rank(b.severity), std::cref(b.code),
                                    std::cref(b_node), std::cref(b.message));
              });
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string render_diagnostic_line(const Diagnostic& diagnostic, const std::string& file,
                                   const std::map<std::string, int>& node_lines) {
    int line = 1;
    if (!diagnostic.nodes.empty()) {
        auto it = node_lines.find(diagnostic.nodes.front());
        if (it != node_lines.end()) {
            line = it->second;
        }
    }
    std::ostringstream out;
    out << severity_name(diagnostic.severity) << ' ' << diagnostic.code << ' ' << file << ':'
        << line << ": " << diagnostic.message << " [";
    for (std::size_t i = 0; i < diagnostic.nodes.size(); ++i) {
        if (i) out << ' ';
        out << diagnostic.nodes[i];
    }
    out << ']';
    return out.str();
}

std::vector<Diagnostic> check_structure(const ArgumentGraph& graph) {
    Adjacency adj(graph);
    std::vector<Diagnostic> findings;

    // R01: exactly one root goal
    std::vector<std::string> roots = root_goals(graph);
    if (roots.size() != 1) {
        findings.push_back(make(Severity::Error, "R01", roots,
                                "expected exactly one root goal, found " +
                                    std::to_string(roots.size())));
    }

    // R02: SupportedBy acyclic
    std::vector<std::string> cycle = find_support_cycle(graph, adj);
    if (!cycle.empty()) {
        findings.push_back(make(Severity::Error, "R02", cycle,
                                "SupportedBy relation contains a cycle"));
    }

    // R03: edge-kind legality
    for (const auto& edge : graph.edges()) {
        NodeKind from = graph.at(edge.from).kind;
        NodeKind to = graph.at(edge.to).kind;
        bool legal = edge.kind == EdgeKind::SupportedBy ? legal_supported_by(from, to)
                                                        : legal_in_context_of(from, to);
        if (!legal) {
            findings.push_back(make(
                Severity::Error, "R03", {edge.from, edge.to},
                std::string(edge_kind_name(edge.kind)) + " edge from " +
                    std::string(node_kind_name(from)) + " '" + edge.from + "' to " +
                    std::string(node_kind_name(to)) + " '" + edge.to + "' is not legal"));
        }
    }

    std::set<std::string> in_supported_by;
    for (const auto& edge : graph.edges()) {
        if (edge.kind == EdgeKind::SupportedBy) {
            in_supported_by.insert(edge.from);
            in_supported_by.insert(edge.to);
        }
    }

    for (const auto& node : graph.nodes()) {
        const auto& support = adj.support_of(node.id);
        switch (node.kind) {
        case NodeKind::Solution:
            // R04: solutions terminate branches
            if (!support.empty()) {
                findings.push_back(make(Severity::Error, "R04", {node.id},
                                        "solution '" + node.id +
                                            "' must not have outgoing SupportedBy edges"));
            }
            // R10: solutions should reference evidence
            if (!node.evidence) {
                findings.push_back(make(Severity::Warning, "R10", {node.id},
                                        "solution '" + node.id +
                                            "' does not reference any evidence"));
            }
            break;
        case NodeKind::Goal:
            // R05: leaf goals must be explicitly undeveloped
            if (support.empty() && !node.flags.undeveloped) {
                findings.push_back(make(Severity::Error, "R05", {node.id},
                                        "goal '" + node.id +
                                            "' is unsupported and not flagged undeveloped"));
            }
            break;
        case NodeKind::Strategy: {
            // R06: strategies need at least one supporting goal
            bool has_goal = std::any_of(support.begin(), support.end(), [&](const auto& id) {
                return graph.at(id).kind == NodeKind::Goal;
            });
            if (!has_goal && !node.flags.undeveloped) {
                findings.push_back(make(Severity::Error, "R06", {node.id},
                                        "strategy '" + node.id +
                                            "' has no supporting goal and is not flagged "
                                            "undeveloped"));
            }
            break;
        }
        case NodeKind::Context:
        case NodeKind::Assumption:
        case NodeKind::Justification:
            // R07: contextual elements stay out of the support relation
            if (in_supported_by.count(node.id)) {
                findings.push_back(make(Severity::Error, "R07", {node.id},
                                        std::string(node_kind_name(node.kind)) + " '" + node.id +
                                            "' participates in a SupportedBy edge"));
            }
            break;
        }

        // R08: uninstantiated statements carry a placeholder
        if (node.flags.uninstantiated && !has_placeholder_token(node.statement)) {
            findings.push_back(make(Severity::Error, "R08", {node.id},
                                    "node '" + node.id +
                                        "' is flagged uninstantiated but its statement has no "
                                        "{placeholder}"));
        }
    }

    // R09: unreachable nodes
    std::set<std::string> reached = reachable_from(graph, adj, roots);
    std::vector<std::string> unreachable;
    for (const auto& node : graph.nodes()) {
        if (!reached.count(node.id)) {
            unreachable.push_back(node.id);
        }
    }
    if (!unreachable.empty()) {
        std::sort(unreachable.begin(), unreachable.end());
        findings.push_back(make(Severity::Warning, "R09", unreachable,
                                std::to_string(unreachable.size()) +
                                    " node(s) unreachable from the root goal"));
    }

    sort_diagnostics(findings);
    return findings;
}

std::vector<Diagnostic> lint(const ArgumentGraph& graph, const Date& today,
                             const LintOptions& options) {
    Adjacency adj(graph);
    std::vector<Diagnostic> findings;
    auto enabled = [&](const char* code) { return !options.disabled_codes.count(code); };

    // L01: hazard-level or shallow claims argued by bare evidence
    if (enabled("L01")) {
        std::map<std::string, int> depth = support_depths(graph, adj);
        for (const auto& node : graph.nodes()) {
            if (node.kind != NodeKind::Goal) continue;
            bool hazard = graph.metadata().hazardous_event_goals.count(node.id) != 0;
            auto it = depth.find(node.id);
            bool shallow = it != depth.end() && it->second <= options.l01_depth;
            if (!hazard && !shallow) continue;

            std::vector<std::string> solutions;
            bool has_argument = false;
            for (const auto& child : adj.support_of(node.id)) {
                NodeKind kind = graph.at(child).kind;
                if (kind == NodeKind::Solution) solutions.push_back(child);
                else if (kind == NodeKind::Goal || kind == NodeKind::Strategy)
                    has_argument = true;
            }
            if (!solutions.empty() && !has_argument) {
                std::vector<std::string> nodes{node.id};
                nodes.insert(nodes.end(), solutions.begin(), solutions.end());
                findings.push_back(make(Severity::Warning, "L01", std::move(nodes),
                                        std::string(hazard ? "hazardous-event" : "top-level") +
                                            " goal '" + node.id +
                                            "' is supported by evidence alone with no "
                                            "intervening argument"));
            }
        }
    }

    // L02: evidence past its validity window
    if (enabled("L02")) {
        for (const auto& node : graph.nodes()) {
            if (!node.evidence || !node.evidence->dated || !node.evidence->valid_for_days) {
                continue;
            }
            Date expiry = add_days(*node.evidence->dated, *node.evidence->valid_for_days);
            if (date_before(expiry, today)) {
                findings.push_back(make(Severity::Warning, "L02", {node.id},
                                        "evidence on '" + node.id + "' expired " +
                                            format_date(expiry) + " (dated " +
                                            format_date(*node.evidence->dated) + ", valid " +
                                            std::to_string(*node.evidence->valid_for_days) +
                                            " days)"));
            }
        }
    }

    // L03: contexts attached to nothing
    if (enabled("L03")) {
        std::set<std::string> attached;
        for (const auto& edge : graph.edges()) {
            attached.insert(edge.from);
            attached.insert(edge.to);
        }
        for (const auto& node : graph.nodes()) {
            if (node.kind == NodeKind::Context && !attached.count(node.id)) {
                findings.push_back(make(Severity::Info, "L03", {node.id},
                                        "context '" + node.id + "' is attached to no node"));
            }
        }
    }

    // L04: root goal without contextual definitions
    if (enabled("L04")) {
        for (const auto& root : root_goals(graph)) {
            if (adj.context_of(root).empty()) {
                findings.push_back(make(Severity::Warning, "L04", {root},
                                        "root goal '" + root +
                                            "' defines no key terms via InContextOf"));
            }
        }
    }

    sort_diagnostics(findings);
    return findings;
}

std::set<LifecyclePhase> all_lifecycle_phases() {
    return {LifecyclePhase::Development, LifecyclePhase::Deployment,
            LifecyclePhase::PostDeployment};
}

CoverageReport check_lifecycle_coverage(const ArgumentGraph& graph,
                                        const std::set<LifecyclePhase>& required_phases) {
    Adjacency adj(graph);
    std::vector<std::string> roots = root_goals(graph);
    if (roots.size() != 1) {
        throw Error(ErrorCode::PreconditionFailed,
                    "coverage requires exactly one root goal (R01), found " +
                        std::to_string(roots.size()));
    }
    if (!find_support_cycle(graph, adj).empty()) {
        throw Error(ErrorCode::PreconditionFailed,
                    "coverage requires an acyclic SupportedBy relation (R02)");
    }
    return compute_coverage(graph, required_phases);
}

std::vector<EvidenceTrace> trace_evidence(const ArgumentGraph& graph,
                                          const std::string& goal_id) {
    const ArgumentNode& start = graph.at(goal_id);
    if (start.kind != NodeKind::Goal) {
        throw Error(ErrorCode::NotAGoal, "'" + goal_id + "' is a " +
                                             std::string(node_kind_name(start.kind)) +
                                             ", not a Goal");
    }
    Adjacency adj(graph);

    // BFS gives shortest SupportedBy paths; first discovery (edge order) wins.
    std::map<std::string, std::string> parent;
    std::deque<std::string> frontier{goal_id};
    std::set<std::string> seen{goal_id};
    while (!frontier.empty()) {
        std::string current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& child : adj.support_of(current)) {
            if (seen.insert(child).second) {
                parent[child] = current;
                frontier.push_back(child);
            }
        }
    }

    std::vector<EvidenceTrace> traces;
    for (const auto& id : seen) {
        const ArgumentNode& node = graph.at(id);
        if (node.kind != NodeKind::Solution) continue;
        EvidenceTrace trace;
        trace.solution_id = id;
        trace.evidence = node.evidence;
        std::vector<std::string> path{id};
        std::string cursor = id;
        while (cursor != goal_id) {
            cursor = parent.at(cursor);
            path.push_back(cursor);
        }
        std::reverse(path.begin(), path.end());
        trace.path = std::move(path);
        traces.push_back(std::move(trace));
    }
    std::sort(traces.begin(), traces.end(), [](const EvidenceTrace& a, const EvidenceTrace& b) {
        return a.solution_id < b.solution_id;
    });
    return traces;
}

ArgumentGraph graph_without_node(const ArgumentGraph& graph, const std::string& node_id) {
    if (!graph.contains(node_id)) {
        throw Error(ErrorCode::UnknownNode, "no node with id '" + node_id + "'");
    }
    std::vector<ArgumentNode> nodes;
    for (const auto& node : graph.nodes()) {
        if (node.id != node_id) nodes.push_back(node);
    }
    std::vector<ArgumentEdge> edges;
    for (const auto& edge : graph.edges()) {
        if (edge.from != node_id && edge.to != node_id) edges.push_back(edge);
    }
    CaseMetadata metadata = graph.metadata();
    metadata.hazardous_event_goals.erase(node_id);
    return build_graph(std::move(metadata), std::move(nodes), std::move(edges));
}

ImpactReport what_if_remove(const ArgumentGraph& graph, const std::string& node_id) {
    if (!graph.contains(node_id)) {
        throw Error(ErrorCode::UnknownNode, "no node with id '" + node_id + "'");
    }
    std::vector<std::string> roots = root_goals(graph);
    if (roots.size() == 1 && roots.front() == node_id) {
        throw Error(ErrorCode::CannotRemoveRoot,
                    "'" + node_id + "' is the sole root goal of the case");
    }

    ArgumentGraph mutant = graph_without_node(graph, node_id);
    ImpactReport impact;

    // newly (implicitly) undeveloped goals
    std::set<std::string> before = implicit_undeveloped_ids(graph);
    std::set<std::string> after = implicit_undeveloped_ids(mutant);
    for (const auto& id : after) {
        if (!before.count(id)) impact.newly_undeveloped_goals.push_back(id);
    }

    // newly uncovered (goal, phase) pairs
    CoverageReport coverage_before = compute_coverage(graph, all_lifecycle_phases());
    CoverageReport coverage_after = compute_coverage(mutant, all_lifecycle_phases());
    for (const auto& pair : coverage_after.missing) {
        if (!coverage_before.missing.count(pair)) {
            impact.newly_uncovered.push_back(pair);
        }
    }

    // newly orphaned nodes, relative to the surviving original roots
    std::vector<std::string> reference_roots;
    for (const auto& root : roots) {
        if (root != node_id) reference_roots.push_back(root);
    }
    Adjacency adj_before(graph);
    Adjacency adj_after(mutant);
    std::set<std::string> reach_before = reachable_from(graph, adj_before, reference_roots);
    std::set<std::string> reach_after = reachable_from(mutant, adj_after, reference_roots);
    for (const auto& node : mutant.nodes()) {
        if (!reach_after.count(node.id) && reach_before.count(node.id)) {
            impact.orphaned_nodes.push_back(node.id);
        }
    }

    std::sort(impact.newly_undeveloped_goals.begin(), impact.newly_undeveloped_goals.end());
    std::sort(impact.newly_uncovered.begin(), impact.newly_uncovered.end());
    std::sort(impact.orphaned_nodes.begin(), impact.orphaned_nodes.end());
    return impact;
}

} // namespace caseforge
