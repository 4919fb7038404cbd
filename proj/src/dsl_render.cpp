#include <sstream>

#include "caseforge/dsl.hpp"
#include "dsl_internal.hpp"

namespace caseforge::detail {

std::string quote_dsl_string(const std::string& value) {
    std::string out = "\"";
    for (char c : value) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string render_case_item(const CaseItem& item) {
    std::ostringstream out;
    out << "case {\n";
    out << "  system: " << quote_dsl_string(item.system) << "\n";
    out << "  version: " << quote_dsl_string(item.version) << "\n";
    out << "  risk-owner: " << quote_dsl_string(item.risk_owner) << "\n";
    out << "}";
    return out.str();
}

namespace {

std::string node_keyword(NodeKind kind) {
    switch (kind) {
    case NodeKind::Goal: return "goal";
    case NodeKind::Strategy: return "strategy";
    case NodeKind::Solution: return "solution";
    case NodeKind::Context: return "context";
    case NodeKind::Assumption: return "assumption";
    case NodeKind::Justification: return "justification";
    }
    return "goal";
}

std::string lifecycle_keyword(LifecyclePhase phase) {
    switch (phase) {
    case LifecyclePhase::Development: return "development";
    case LifecyclePhase::Deployment: return "deployment";
    case LifecyclePhase::PostDeployment: return "post-deployment";
    }
    return "development";
}

std::string acp_keyword(ConfidenceLevel level) {
    switch (level) {
    case ConfidenceLevel::Low: return "low";
    case ConfidenceLevel::Medium: return "medium";
    case ConfidenceLevel::High: return "high";
    }
    return "medium";
}

} // namespace

std::string render_node_item(const NodeItem& item) {
    const ArgumentNode& node = item.node;
    std::ostringstream out;
    out << node_keyword(node.kind) << ' ' << node.id << ' '
        << quote_dsl_string(node.statement);

    std::vector<std::string> attrs;
    if (node.flags.undeveloped) attrs.push_back("undeveloped");
    if (node.flags.uninstantiated) attrs.push_back("uninstantiated");
    if (item.hazardous_event) attrs.push_back("hazardous-event");
    if (node.lifecycle) {
        attrs.push_back("lifecycle: " + lifecycle_keyword(*node.lifecycle));
    }
    if (node.acp) {
        attrs.push_back("acp: " + acp_keyword(node.acp->level) + " " +
                        quote_dsl_string(node.acp->label));
    }
    if (node.evidence) {
        std::string attr = "evidence: " + quote_dsl_string(node.evidence->uri_or_path);
        if (!node.evidence->description.empty()) {
            attr += " " + quote_dsl_string(node.evidence->description);
        }
        if (node.evidence->dated) {
            attr += " dated: " + format_date(*node.evidence->dated);
        }
        if (node.evidence->valid_for_days) {
            attr += " valid-days: " + std::to_string(*node.evidence->valid_for_days);
        }
        attrs.push_back(std::move(attr));
    }

    if (!attrs.empty()) {
        out << " { ";
        for (std::size_t i = 0; i < attrs.size(); ++i) {
            if (i) out << ", ";
            out << attrs[i];
        }
        out << " }";
    }
    return out.str();
}

std::string render_edge_item(const EdgeItem& item) {
    const char* arrow = item.edge.kind == EdgeKind::SupportedBy ? "<-" : "<-ctx";
    return item.edge.from + " " + arrow + " " + item.edge.to;
}

namespace {

std::string render_items(const std::vector<DocItem>& items) {
    std::ostringstream out;
    bool first = true;
    bool blank_pending = false;
    for (const auto& item : items) {
        if (std::holds_alternative<BlankItem>(item)) {
            blank_pending = !first;
            continue;
        }
        if (!first) {
            out << '\n';
            if (blank_pending) out << '\n';
        }
        blank_pending = false;
        first = false;
        if (auto* comment = std::get_if<CommentItem>(&item)) {
            if (comment->text.empty()) out << "#";
            else out << "# " << comment->text;
        } else if (auto* case_item = std::get_if<CaseItem>(&item)) {
            out << render_case_item(*case_item);
        } else if (auto* node_item = std::get_if<NodeItem>(&item)) {
            out << render_node_item(*node_item);
        } else if (auto* edge_item = std::get_if<EdgeItem>(&item)) {
            out << render_edge_item(*edge_item);
        }
    }
    if (!first) out << '\n';
    return out.str();
}

} // namespace
} // namespace caseforge::detail

namespace caseforge {

std::string render_dsl(const ArgumentGraph& graph) {
    using namespace detail;
    std::vector<DocItem> items;

    const CaseMetadata& metadata = graph.metadata();
    if (!metadata.system_name.empty() || !metadata.case_version.empty() ||
        !metadata.risk_owner.empty()) {
        CaseItem case_item;
        case_item.system = metadata.system_name;
        case_item.version = metadata.case_version;
        case_item.risk_owner = metadata.risk_owner;
        items.emplace_back(std::move(case_item));
        items.emplace_back(BlankItem{});
    }
    for (const auto& node : graph.nodes()) {
        NodeItem item;
        item.node = node;
        item.hazardous_event = metadata.hazardous_event_goals.count(node.id) != 0;
        items.emplace_back(std::move(item));
    }
    if (!graph.edges().empty()) {
        items.emplace_back(BlankItem{});
        for (const auto& edge : graph.edges()) {
            EdgeItem item;
            item.edge = edge;
            items.emplace_back(std::move(item));
        }
    }
    return render_items(items);
}

FormatResult format(const std::string& text) {
    detail::Document document = detail::parse_document(text);
    FormatResult result;
    if (!document.ok()) {
        result.errors = std::move(document.errors);
        return result;
    }
    result.text = detail::render_items(document.items);
    return result;
}

} // namespace caseforge
