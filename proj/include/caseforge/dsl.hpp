#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "caseforge/argument.hpp"

namespace caseforge {

struct SourceSpan {
    int line = 1;   // 1-based
    int column = 1; // 1-based
    int length = 0;

    bool operator==(const SourceSpan&) const = default;
};

enum class ParseCode {
    Syntax,        // SYNTAX
    DupId,         // DUP_ID
    UnknownRef,    // UNKNOWN_REF
    BadAttr,       // BAD_ATTR
    BadEdgeSyntax, // BAD_EDGE_SYNTAX
};

std::string_view parse_code_name(ParseCode code);

struct ParseError {
    SourceSpan span;
    ParseCode code = ParseCode::Syntax;
    std::string message;
};

/// Outcome of parsing a .gsn document. An empty document is a success; the
/// parser recovers at statement boundaries and reports every error it finds.
struct ParseResult {
    std::optional<ArgumentGraph> graph; // present iff errors is empty
    std::vector<ParseError> errors;
    std::map<std::string, int> node_lines; // node id -> 1-based declaration line

    bool ok() const { return errors.empty(); }
};

/// Parses DSL source text. Never throws on malformed input; CRLF is
/// normalised to LF first.
ParseResult parse(const std::string& text);

/// Renders a graph to canonical DSL text (case block, nodes in insertion
/// order, then edges). parse(render_dsl(g)) reproduces g.
std::string render_dsl(const ArgumentGraph& graph);

/// Reformats DSL source in place: statement order and comments are kept,
/// layout and attribute order are canonicalised. Idempotent on its own
/// output. Returns errors (and no text) when the input does not parse.
struct FormatResult {
    std::optional<std::string> text;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

FormatResult format(const std::string& text);

} // namespace caseforge
