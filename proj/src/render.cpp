#include "caseforge/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "caseforge/case_json.hpp"
#include "caseforge/validator.hpp"

namespace caseforge {

std::optional<RenderFormat> render_format_from_name(const std::string& name) {
    if (name == "dot") return RenderFormat::Dot;
    if (name == "markdown") return RenderFormat::Markdown;
    if (name == "json") return RenderFormat::Json;
    return std::nullopt;
}

namespace {

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::string dot_node_statement(const ArgumentNode& node, bool highlighted) {
    std::string label = node.id + "\\n" + dot_escape(node.statement);
    if (node.flags.undeveloped || node.flags.uninstantiated) {
        label += "\\n\u25C7"; // hollow diamond: awaiting development/instantiation
    }
    std::string shape;
    std::string extra;
    switch (node.kind) {
    case NodeKind::Goal: shape = "box"; break;
    case NodeKind::Strategy: shape = "parallelogram"; break;
    case NodeKind::Solution: shape = "circle"; break;
    case NodeKind::Context:
        shape = "box";
        extra = ", style=rounded";
        break;
    case NodeKind::Assumption:
    case NodeKind::Justification:
        shape = "ellipse";
        label += node.kind == NodeKind::Assumption ? " A" : " J";
        break;
    }
    std::string out = "  \"" + node.id + "\" [shape=" + shape + extra + ", label=\"" +
                      label + "\"";
    if (highlighted) {
        out += ", color=crimson, penwidth=2";
    }
    out += "];";
    return out;
}

std::string render_dot(const ArgumentGraph& graph, const RenderOptions& options) {
    std::vector<const ArgumentNode*> nodes;
    for (const auto& node : graph.nodes()) {
        nodes.push_back(&node);
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const ArgumentNode* a, const ArgumentNode* b) { return a->id < b->id; });

    // first (hazardous goal, phase) bucket claims a node for its cluster
    std::map<std::string, std::pair<std::string, LifecyclePhase>> lane_of;
    if (options.show_lifecycle_lanes) {
        CoverageReport coverage = check_lifecycle_coverage(graph);
        for (const auto& [goal, phases] : coverage.buckets) {
            for (const auto& [phase, members] : phases) {
                for (const auto& id : members) {
                    lane_of.emplace(id, std::make_pair(goal, phase));
                }
            }
        }
    }

    std::ostringstream out;
    out << "digraph safety_case {\n";
    out << "  rankdir=TB;\n";
    out << "  node [fontname=\"Helvetica\"];\n";

    if (options.show_lifecycle_lanes) {
        // clusters first: graphviz assigns membership at first mention
        std::map<std::pair<std::string, LifecyclePhase>, std::vector<std::string>> lanes;
        for (const auto& [id, lane] : lane_of) {
            lanes[lane].push_back(id);
        }
        int index = 0;
        for (const auto& [lane, members] : lanes) {
            out << "  subgraph cluster_" << index++ << " {\n";
            out << "    label=\"" << dot_escape(lane.first) << ": "
                << lifecycle_phase_name(lane.second) << "\";\n";
            for (const auto& id : members) {
                out << "    \"" << id << "\";\n";
            }
            out << "  }\n";
        }
    }

    for (const ArgumentNode* node : nodes) {
        out << dot_node_statement(*node, options.highlight.count(node->id) != 0) << '\n';
    }

    std::vector<ArgumentEdge> edges = graph.edges();
    std::sort(edges.begin(), edges.end(), [](const ArgumentEdge& a, const ArgumentEdge& b) {
        return std::tuple(edge_kind_name(a.kind), a.from, a.to) <
               std::tuple(edge_kind_name(b.kind), b.from, b.to);
    });
    for (const auto& edge : edges) {
        out << "  \"" << edge.from << "\" -> \"" << edge.to << "\"";
        if (edge.kind == EdgeKind::InContextOf) {
            out << " [arrowhead=empty]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

void render_markdown_subtree(const ArgumentGraph& graph,
                             const std::map<std::string, std::vector<std::string>>& support,
                             const std::map<std::string, std::vector<std::string>>& context,
                             const std::string& id, int depth, std::set<std::string>& visited,
                             std::ostringstream& out) {
    std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    const ArgumentNode& node = graph.at(id);
    if (!visited.insert(id).second) {
        out << indent << "- (see " << id << ")\n";
        return;
    }
    out << indent << "- **" << id << "** [" << node_kind_name(node.kind) << "] "
        << node.statement;
    std::vector<std::string> marks;
    if (node.flags.undeveloped) marks.push_back("undeveloped");
    if (node.flags.uninstantiated) marks.push_back("uninstantiated");
    if (graph.metadata().hazardous_event_goals.count(id)) marks.push_back("hazardous-event");
    if (node.lifecycle) marks.push_back(std::string(lifecycle_phase_name(*node.lifecycle)));
    if (!marks.empty()) {
        out << " _(";
        for (std::size_t i = 0; i < marks.size(); ++i) {
            if (i) out << ", ";
            out << marks[i];
        }
        out << ")_";
    }
    out << '\n';
    auto ctx = context.find(id);
    if (ctx != context.end()) {
        for (const auto& child : ctx->second) {
            std::string child_indent(static_cast<std::size_t>(depth + 1) * 2, ' ');
            const ArgumentNode& ctx_node = graph.at(child);
            out << child_indent << "- **" << child << "** ["
                << node_kind_name(ctx_node.kind) << "] " << ctx_node.statement << '\n';
            visited.insert(child);
        }
    }
    auto sup = support.find(id);
    if (sup != support.end()) {
        for (const auto& child : sup->second) {
            render_markdown_subtree(graph, support, context, child, depth + 1, visited, out);
        }
    }
}

std::string render_markdown(const ArgumentGraph& graph) {
    std::map<std::string, std::vector<std::string>> support;
    std::map<std::string, std::vector<std::string>> context;
    for (const auto& edge : graph.edges()) {
        (edge.kind == EdgeKind::SupportedBy ? support : context)[edge.from].push_back(edge.to);
    }
    std::ostringstream out;
    const CaseMetadata& metadata = graph.metadata();
    out << "# " << (metadata.system_name.empty() ? "Safety case" : metadata.system_name);
    if (!metadata.case_version.empty()) {
        out << " (v" << metadata.case_version << ")";
    }
    out << "\n\n";
    if (!metadata.risk_owner.empty()) {
        out << "Risk owner: " << metadata.risk_owner << "\n\n";
    }
    std::set<std::string> visited;
    for (const auto& root : root_goals(graph)) {
        render_markdown_subtree(graph, support, context, root, 0, visited, out);
    }
    std::vector<std::string> unattached;
    for (const auto& node : graph.nodes()) {
        if (!visited.count(node.id)) {
            unattached.push_back(node.id);
        }
    }
    if (!unattached.empty()) {
        std::sort(unattached.begin(), unattached.end());
        out << "\n## Unattached nodes\n\n";
        for (const auto& id : unattached) {
            const ArgumentNode& node = graph.at(id);
            out << "- **" << id << "** [" << node_kind_name(node.kind) << "] "
                << node.statement << '\n';
        }
    }
    return out.str();
}

} // namespace

std::string render_case(const ArgumentGraph& graph, const RenderOptions& options) {
    switch (options.format) {
    case RenderFormat::Dot: return render_dot(graph, options);
    case RenderFormat::Markdown: return render_markdown(graph);
    case RenderFormat::Json: return serialize_canonical(graph) + "\n";
    }
    return {};
}

} // namespace caseforge
