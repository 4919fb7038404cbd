#pragma once

// Statement-level document model shared by the parser, the formatter and the
// DSL renderer. Comments and blank separators survive here so format() can
// reproduce them.

#include <string>
#include <variant>
#include <vector>

#include "caseforge/argument.hpp"
#include "caseforge/dsl.hpp"

namespace caseforge::detail {

struct BlankItem {};

struct CommentItem {
    std::string text; // without the leading '#'
};

struct CaseItem {
    std::string system;
    std::string version;
    std::string risk_owner;
    int line = 1;
};

struct NodeItem {
    ArgumentNode node;
    bool hazardous_event = false;
    int line = 1;
};

struct EdgeItem {
    ArgumentEdge edge;
    int line = 1;
    SourceSpan from_span;
    SourceSpan to_span;
};

using DocItem = std::variant<BlankItem, CommentItem, CaseItem, NodeItem, EdgeItem>;

struct Document {
    std::vector<DocItem> items;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

/// Parses source text into the document model (error recovery at statement
/// boundaries; reports every error found).
Document parse_document(const std::string& text);

/// Builds the public ParseResult from a document (duplicate ids, unresolved
/// references and metadata assembly happen here).
ParseResult assemble(Document document);

std::string render_case_item(const CaseItem& item);
std::string render_node_item(const NodeItem& item);
std::string render_edge_item(const EdgeItem& item);
std::string quote_dsl_string(const std::string& value);

} // namespace caseforge::detail
