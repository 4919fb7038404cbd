#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include "caseforge/dsl.hpp"
#include "dsl_internal.hpp"

namespace caseforge {

std::string_view parse_code_name(ParseCode code) {
    switch (code) {
    case ParseCode::Syntax: return "SYNTAX";
    case ParseCode::DupId: return "DUP_ID";
    case ParseCode::UnknownRef: return "UNKNOWN_REF";
    case ParseCode::BadAttr: return "BAD_ATTR";
    case ParseCode::BadEdgeSyntax: return "BAD_EDGE_SYNTAX";
    }
    return "SYNTAX";
}

namespace detail {
namespace {

bool is_word_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == '-';
}

struct Token {
    enum class Type { Word, String, LBrace, RBrace, Comma, Colon, Arrow };
    Type type = Type::Word;
    std::string text; // word text, decoded string value, or arrow suffix
    SourceSpan span;
};

struct RawStatement {
    int line = 1; // first line
    std::vector<Token> tokens;
    bool poisoned = false; // lexing failed; already reported
};

/// Splits normalised source into statements, comments and blank separators.
/// Statements are line-oriented but continue across lines while a brace
/// block is open. Comments float out of statements onto their own items.
class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void run() {
        while (pos_ < text_.size()) {
            scan_char();
        }
        finish_line(true);
    }

    struct StatementRef {};
    std::vector<RawStatement> statements;
    std::vector<std::variant<BlankItem, CommentItem, StatementRef>> layout;
    std::vector<ParseError> errors;

private:
    SourceSpan span_at(std::size_t offset, int length) const {
        SourceSpan span;
        span.line = line_;
        span.column = static_cast<int>(offset - line_start_) + 1;
        span.length = length;
        return span;
    }

    void error(std::size_t offset, int length, const std::string& message) {
        ParseError err;
        err.span = span_at(offset, length);
        err.code = ParseCode::Syntax;
        err.message = message;
        errors.push_back(std::move(err));
    }

    void open_statement() {
        if (!statement_open_) {
            statement_open_ = true;
            current_ = RawStatement{};
            current_.line = line_;
        }
    }

    void push_token(Token token) {
        open_statement();
        current_.tokens.push_back(std::move(token));
    }

    void poison_statement() {
        open_statement();
        current_.poisoned = true;
        // skip to the end of the physical line; the brace depth is reset so
        // the next line starts a fresh statement
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            ++pos_;
        }
        depth_ = 0;
    }

    void close_statement() {
        if (statement_open_) {
            for (auto& comment : pending_comments_) {
                layout.emplace_back(std::move(comment));
            }
            pending_comments_.clear();
            statements.push_back(std::move(current_));
            layout.emplace_back(StatementRef{});
            statement_open_ = false;
        }
        blank_emitted_ = false;
    }

    void finish_line(bool eof) {
        if (statement_open_ && depth_ == 0) {
            close_statement();
        } else if (!statement_open_) {
            if (line_had_comment_only_) {
                for (auto& comment : pending_comments_) {
                    layout.emplace_back(std::move(comment));
                }
                pending_comments_.clear();
                blank_emitted_ = false;
            } else if (line_was_blank_ && !eof && !layout.empty() && !blank_emitted_) {
                layout.emplace_back(BlankItem{});
                blank_emitted_ = true;
            }
        }
        line_had_comment_only_ = false;
        line_was_blank_ = true;
    }

    void scan_char() {
        char c = text_[pos_];
        if (c == '\n') {
            finish_line(false);
            ++pos_;
            ++line_;
            line_start_ = pos_;
            return;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++pos_;
            return;
        }
        if (c == '#') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '\n') {
                ++pos_;
            }
            std::string body = text_.substr(start + 1, pos_ - start - 1);
            // trim
            while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) {
                body.erase(body.begin());
            }
            while (!body.empty() && (body.back() == ' ' || body.back() == '\t' ||
                                     body.back() == '\r')) {
                body.pop_back();
            }
            pending_comments_.push_back(CommentItem{std::move(body)});
            if (line_was_blank_ && !statement_open_) {
                line_had_comment_only_ = true;
            }
            return;
        }
        line_was_blank_ = false;
        switch (c) {
        case '{':
            push_token({Token::Type::LBrace, "{", span_at(pos_, 1)});
            ++depth_;
            ++pos_;
            return;
        case '}':
            push_token({Token::Type::RBrace, "}", span_at(pos_, 1)});
            if (depth_ > 0) --depth_;
            ++pos_;
            return;
        case ',':
            push_token({Token::Type::Comma, ",", span_at(pos_, 1)});
            ++pos_;
            return;
        case ':':
            push_token({Token::Type::Colon, ":", span_at(pos_, 1)});
            ++pos_;
            return;
        case '"':
            scan_string();
            return;
        case '<':
            scan_arrow();
            return;
        default:
            if (is_word_char(c)) {
                scan_word();
                return;
            }
            error(pos_, 1, std::string("unexpected character '") + c + "'");
            poison_statement();
            return;
        }
    }

    void scan_word() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_word_char(text_[pos_])) {
            ++pos_;
        }
        std::string word = text_.substr(start, pos_ - start);
        push_token({Token::Type::Word, std::move(word),
                    span_at(start, static_cast<int>(pos_ - start))});
    }

    void scan_string() {
        std::size_t start = pos_;
        ++pos_; // opening quote
        std::string value;
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            char c = text_[pos_];
            if (c == '"') {
                ++pos_;
                push_token({Token::Type::String, std::move(value),
                            span_at(start, static_cast<int>(pos_ - start))});
                return;
            }
            if (c == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] != '\n') {
                char esc = text_[pos_ + 1];
                switch (esc) {
                case 'n': value.push_back('\n'); break;
                case 't': value.push_back('\t'); break;
                case 'r': value.push_back('\r'); break;
                case '"': value.push_back('"'); break;
                case '\\': value.push_back('\\'); break;
                default: value.push_back(esc); break;
                }
                pos_ += 2;
                continue;
            }
            value.push_back(c);
            ++pos_;
        }
        error(start, static_cast<int>(pos_ - start), "unterminated string");
        poison_statement();
    }

    void scan_arrow() {
        std::size_t start = pos_;
        if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '-') {
            error(start, 1, "expected '<-' edge operator");
            poison_statement();
            return;
        }
        pos_ += 2;
        std::size_t suffix_start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
            ++pos_;
        }
        std::string suffix = text_.substr(suffix_start, pos_ - suffix_start);
        push_token({Token::Type::Arrow, std::move(suffix),
                    span_at(start, static_cast<int>(pos_ - start))});
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_start_ = 0;
    int line_ = 1;
    int depth_ = 0;
    bool statement_open_ = false;
    bool line_was_blank_ = true;
    bool line_had_comment_only_ = false;
    bool blank_emitted_ = false;
    RawStatement current_;
    std::vector<CommentItem> pending_comments_;
};

/// Recursive-descent parser over one statement's tokens.
class StatementParser {
public:
    StatementParser(const RawStatement& statement, std::vector<ParseError>& errors)
        : statement_(statement), errors_(errors) {}

    std::optional<DocItem> run() {
        if (statement_.tokens.empty()) {
            return std::nullopt;
        }
        const Token& head = peek();
        if (head.type != Token::Type::Word) {
            syntax(head, "expected a statement keyword, node declaration or edge");
            return std::nullopt;
        }
        if (head.text == "case") {
            return parse_case();
        }
        if (node_kind_from_keyword(head.text)) {
            return parse_node();
        }
        return parse_edge();
    }

private:
    static std::optional<NodeKind> node_kind_from_keyword(const std::string& word) {
        if (word == "goal") return NodeKind::Goal;
        if (word == "strategy") return NodeKind::Strategy;
        if (word == "solution") return NodeKind::Solution;
        if (word == "context") return NodeKind::Context;
        if (word == "assumption") return NodeKind::Assumption;
        if (word == "justification") return NodeKind::Justification;
        return std::nullopt;
    }

    bool done() const { return index_ >= statement_.tokens.size(); }
    const Token& peek() const { return statement_.tokens[index_]; }
    const Token& advance() { return statement_.tokens[index_++]; }

    SourceSpan end_span() const {
        const Token& last = statement_.tokens.back();
        SourceSpan span = last.span;
        span.column += span.length;
        span.length = 0;
        return span;
    }

    void report(ParseCode code, const SourceSpan& span, const std::string& message) {
        errors_.push_back(ParseError{span, code, message});
    }

    void syntax(const Token& token, const std::string& message) {
        report(ParseCode::Syntax, token.span, message);
    }

    bool expect_colon(const std::string& what) {
        if (done() || peek().type != Token::Type::Colon) {
            report(ParseCode::Syntax, done() ? end_span() : peek().span,
                   "expected ':' after '" + what + "'");
            return false;
        }
        advance();
        return true;
    }

    std::optional<DocItem> parse_case() {
        const Token& keyword = advance();
        CaseItem item;
        item.line = statement_.line;
        if (done() || peek().type != Token::Type::LBrace) {
            syntax(keyword, "expected '{' after 'case'");
            return std::nullopt;
        }
        advance();
        std::set<std::string> seen;
        while (!done() && peek().type != Token::Type::RBrace) {
            if (peek().type == Token::Type::Comma) {
                advance();
                continue;
            }
            if (peek().type != Token::Type::Word) {
                syntax(peek(), "expected metadata key");
                return std::nullopt;
            }
            const Token& key = advance();
            if (key.text != "system" && key.text != "version" && key.text != "risk-owner") {
                report(ParseCode::BadAttr, key.span,
                       "unknown case metadata key '" + key.text + "'");
                return std::nullopt;
            }
            if (!seen.insert(key.text).second) {
                report(ParseCode::BadAttr, key.span, "duplicate metadata key '" + key.text + "'");
                return std::nullopt;
            }
            if (!expect_colon(key.text)) {
                return std::nullopt;
            }
            if (done() || peek().type != Token::Type::String) {
                report(ParseCode::Syntax, done() ? end_span() : peek().span,
                       "expected quoted value for '" + key.text + "'");
                return std::nullopt;
            }
            const Token& value = advance();
            if (key.text == "system") item.system = value.text;
            else if (key.text == "version") item.version = value.text;
            else item.risk_owner = value.text;
        }
        if (done()) {
            report(ParseCode::Syntax, end_span(), "expected '}' to close case block");
            return std::nullopt;
        }
        advance(); // '}'
        if (!done()) {
            syntax(peek(), "unexpected tokens after case block");
            return std::nullopt;
        }
        return DocItem{item};
    }

    std::optional<DocItem> parse_node() {
        const Token& keyword = advance();
        NodeItem item;
        item.line = statement_.line;
        item.node.kind = *node_kind_from_keyword(keyword.text);
        if (done() || peek().type != Token::Type::Word) {
            report(ParseCode::Syntax, done() ? end_span() : peek().span,
                   "expected node id after '" + keyword.text + "'");
            return std::nullopt;
        }
        const Token& id = advance();
        if (!is_valid_node_id(id.text)) {
            report(ParseCode::Syntax, id.span, "invalid node id '" + id.text + "'");
            return std::nullopt;
        }
        item.node.id = id.text;
        if (done() || peek().type != Token::Type::String) {
            report(ParseCode::Syntax, done() ? end_span() : peek().span,
                   "expected quoted statement for node '" + id.text + "'");
            return std::nullopt;
        }
        item.node.statement = advance().text;
        if (!done() && peek().type == Token::Type::LBrace) {
            advance();
            if (!parse_attributes(item)) {
                return std::nullopt;
            }
        }
        if (!done()) {
            syntax(peek(), "unexpected tokens after node declaration");
            return std::nullopt;
        }
        return DocItem{item};
    }

    /// Attribute errors are recoverable: the node still registers so that
    /// later edge references do not cascade into spurious UNKNOWN_REFs.
    bool parse_attributes(NodeItem& item) {
        std::set<std::string> seen;
        while (true) {
            if (done()) {
                report(ParseCode::Syntax, end_span(), "expected '}' to close attribute block");
                return false;
            }
            if (peek().type == Token::Type::RBrace) {
                advance();
                return true;
            }
            if (peek().type == Token::Type::Comma) {
                advance();
                continue;
            }
            if (peek().type != Token::Type::Word) {
                report(ParseCode::BadAttr, peek().span, "expected attribute name");
                skip_to_attr_boundary();
                continue;
            }
            const Token& name = advance();
            if (!seen.insert(name.text).second) {
                report(ParseCode::BadAttr, name.span, "duplicate attribute '" + name.text + "'");
                skip_to_attr_boundary();
                continue;
            }
            parse_one_attribute(item, name);
        }
    }

    void skip_to_attr_boundary() {
        while (!done() && peek().type != Token::Type::Comma &&
               peek().type != Token::Type::RBrace) {
            advance();
        }
    }

    void parse_one_attribute(NodeItem& item, const Token& name) {
        NodeKind kind = item.node.kind;
        if (name.text == "undeveloped") {
            item.node.flags.undeveloped = true;
            return;
        }
        if (name.text == "uninstantiated") {
            item.node.flags.uninstantiated = true;
            return;
        }
        if (name.text == "hazardous-event") {
            if (kind != NodeKind::Goal) {
                report(ParseCode::BadAttr, name.span,
                       "'hazardous-event' is only valid on goals");
                return;
            }
            item.hazardous_event = true;
            return;
        }
        if (name.text == "lifecycle") {
            if (kind != NodeKind::Goal && kind != NodeKind::Strategy) {
                report(ParseCode::BadAttr, name.span,
                       "'lifecycle' is only valid on goals and strategies");
                skip_to_attr_boundary();
                return;
            }
            if (!expect_colon(name.text)) {
                skip_to_attr_boundary();
                return;
            }
            if (done() || peek().type != Token::Type::Word) {
                report(ParseCode::BadAttr, name.span, "expected lifecycle phase");
                skip_to_attr_boundary();
                return;
            }
            const Token& value = advance();
            if (value.text == "development") item.node.lifecycle = LifecyclePhase::Development;
            else if (value.text == "deployment") item.node.lifecycle = LifecyclePhase::Deployment;
            else if (value.text == "post-deployment")
                item.node.lifecycle = LifecyclePhase::PostDeployment;
            else {
                report(ParseCode::BadAttr, value.span,
                       "unknown lifecycle phase '" + value.text +
                           "' (expected development, deployment or post-deployment)");
            }
            return;
        }
        if (name.text == "acp") {
            if (!expect_colon(name.text)) {
                skip_to_attr_boundary();
                return;
            }
            if (done() || peek().type != Token::Type::Word) {
                report(ParseCode::BadAttr, name.span, "expected acp level (low, medium or high)");
                skip_to_attr_boundary();
                return;
            }
            const Token& level = advance();
            ConfidenceAssertion acp;
            if (level.text == "low") acp.level = ConfidenceLevel::Low;
            else if (level.text == "medium") acp.level = ConfidenceLevel::Medium;
            else if (level.text == "high") acp.level = ConfidenceLevel::High;
            else {
                report(ParseCode::BadAttr, level.span,
                       "unknown acp level '" + level.text + "'");
                skip_to_attr_boundary();
                return;
            }
            if (done() || peek().type != Token::Type::String) {
                report(ParseCode::BadAttr, level.span, "expected quoted acp label");
                skip_to_attr_boundary();
                return;
            }
            acp.label = advance().text;
            item.node.acp = std::move(acp);
            return;
        }
        if (name.text == "evidence") {
            if (kind != NodeKind::Solution) {
                report(ParseCode::BadAttr, name.span, "'evidence' is only valid on solutions");
                skip_to_attr_boundary();
                return;
            }
            if (!expect_colon(name.text)) {
                skip_to_attr_boundary();
                return;
            }
            if (done() || peek().type != Token::Type::String) {
                report(ParseCode::BadAttr, name.span, "expected quoted evidence uri");
                skip_to_attr_boundary();
                return;
            }
            EvidenceRef evidence;
            evidence.uri_or_path = advance().text;
            if (!done() && peek().type == Token::Type::String) {
                evidence.description = advance().text;
            }
            if (!done() && peek().type == Token::Type::Word && peek().text == "dated") {
                const Token& dated = advance();
                if (!expect_colon(dated.text)) {
                    skip_to_attr_boundary();
                    return;
                }
                if (done() || peek().type != Token::Type::Word) {
                    report(ParseCode::BadAttr, dated.span, "expected date as YYYY-MM-DD");
                    skip_to_attr_boundary();
                    return;
                }
                const Token& value = advance();
                auto date = parse_date(value.text);
                if (!date) {
                    report(ParseCode::BadAttr, value.span,
                           "invalid date '" + value.text + "' (expected YYYY-MM-DD)");
                    skip_to_attr_boundary();
                    return;
                }
                evidence.dated = *date;
            }
            if (!done() && peek().type == Token::Type::Word && peek().text == "valid-days") {
                const Token& vd = advance();
                if (!evidence.dated) {
                    report(ParseCode::BadAttr, vd.span, "'valid-days' requires 'dated'");
                    skip_to_attr_boundary();
                    return;
                }
                if (!expect_colon(vd.text)) {
                    skip_to_attr_boundary();
                    return;
                }
                if (done() || peek().type != Token::Type::Word) {
                    report(ParseCode::BadAttr, vd.span, "expected positive day count");
                    skip_to_attr_boundary();
                    return;
                }
                const Token& value = advance();
                char* end = nullptr;
                long days = std::strtol(value.text.c_str(), &end, 10);
                if (*end != '\0' || days <= 0) {
                    report(ParseCode::BadAttr, value.span,
                           "'valid-days' must be a positive integer");
                    skip_to_attr_boundary();
                    return;
                }
                evidence.valid_for_days = static_cast<int>(days);
            }
            item.node.evidence = std::move(evidence);
            return;
        }
        report(ParseCode::BadAttr, name.span, "unknown attribute '" + name.text + "'");
        skip_to_attr_boundary();
    }

    std::optional<DocItem> parse_edge() {
        const Token& from = advance();
        if (done() || peek().type != Token::Type::Arrow) {
            report(ParseCode::Syntax, done() ? end_span() : peek().span,
                   "expected a statement keyword, node declaration or edge");
            return std::nullopt;
        }
        const Token& arrow = advance();
        EdgeKind kind;
        if (arrow.text.empty()) {
            kind = EdgeKind::SupportedBy;
        } else if (arrow.text == "ctx") {
            kind = EdgeKind::InContextOf;
        } else {
            report(ParseCode::BadEdgeSyntax, arrow.span,
                   "unknown edge operator '<-" + arrow.text + "'");
            return std::nullopt;
        }
        if (!is_valid_node_id(from.text)) {
            report(ParseCode::BadEdgeSyntax, from.span, "invalid node id '" + from.text + "'");
            return std::nullopt;
        }
        if (done() || peek().type != Token::Type::Word) {
            report(ParseCode::BadEdgeSyntax, done() ? end_span() : peek().span,
                   "expected target node id after edge operator");
            return std::nullopt;
        }
        const Token& to = advance();
        if (!is_valid_node_id(to.text)) {
            report(ParseCode::BadEdgeSyntax, to.span, "invalid node id '" + to.text + "'");
            return std::nullopt;
        }
        if (!done()) {
            report(ParseCode::BadEdgeSyntax, peek().span, "unexpected tokens after edge");
            return std::nullopt;
        }
        if (from.text == to.text) {
            report(ParseCode::BadEdgeSyntax, to.span,
                   "edge from '" + from.text + "' to itself");
            return std::nullopt;
        }
        EdgeItem item;
        item.edge.kind = kind;
        item.edge.from = from.text;
        item.edge.to = to.text;
        item.line = statement_.line;
        item.to_span = to.span;
        item.from_span = from.span;
        return DocItem{item};
    }

    const RawStatement& statement_;
    std::vector<ParseError>& errors_;
    std::size_t index_ = 0;
};

std::string normalize(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            continue; // CRLF -> LF
        }
        out.push_back(text[i]);
    }
    return out;
}

} // namespace

Document parse_document(const std::string& text) {
    std::string normalized = normalize(text);
    Scanner scanner(normalized);
    scanner.run();

    Document document;
    document.errors = std::move(scanner.errors);

    std::size_t statement_index = 0;
    for (auto& slot : scanner.layout) {
        if (std::holds_alternative<BlankItem>(slot)) {
            document.items.emplace_back(BlankItem{});
        } else if (auto* comment = std::get_if<CommentItem>(&slot)) {
            document.items.emplace_back(std::move(*comment));
        } else {
            const RawStatement& raw = scanner.statements[statement_index++];
            if (raw.poisoned) {
                continue; // scanner already reported
            }
            StatementParser parser(raw, document.errors);
            if (auto item = parser.run()) {
                document.items.push_back(std::move(*item));
            }
        }
    }
    return document;
}

ParseResult assemble(Document document) {
    ParseResult result;
    result.errors = std::move(document.errors);

    CaseMetadata metadata;
    bool seen_case = false;
    std::vector<ArgumentNode> nodes;
    std::map<std::string, int> declared; // id -> line
    std::vector<EdgeItem> edge_items;

    for (auto& item : document.items) {
        if (auto* case_item = std::get_if<CaseItem>(&item)) {
            if (seen_case) {
                result.errors.push_back(ParseError{SourceSpan{case_item->line, 1, 0},
                                                   ParseCode::Syntax, "duplicate case block"});
                continue;
            }
            seen_case = true;
            metadata.system_name = case_item->system;
            metadata.case_version = case_item->version;
            metadata.risk_owner = case_item->risk_owner;
        } else if (auto* node_item = std::get_if<NodeItem>(&item)) {
            auto [it, inserted] = declared.emplace(node_item->node.id, node_item->line);
            if (!inserted) {
                result.errors.push_back(
                    ParseError{SourceSpan{node_item->line, 1, 0}, ParseCode::DupId,
                               "node id '" + node_item->node.id + "' already declared on line " +
                                   std::to_string(it->second)});
                continue;
            }
            if (node_item->hazardous_event) {
                metadata.hazardous_event_goals.insert(node_item->node.id);
            }
            result.node_lines[node_item->node.id] = node_item->line;
            nodes.push_back(std::move(node_item->node));
        } else if (auto* edge_item = std::get_if<EdgeItem>(&item)) {
            edge_items.push_back(std::move(*edge_item));
        }
    }

    std::vector<ArgumentEdge> edges;
    std::set<std::tuple<EdgeKind, std::string, std::string>> seen_edges;
    for (auto& item : edge_items) {
        bool resolved = true;
        if (!declared.count(item.edge.from)) {
            result.errors.push_back(ParseError{item.from_span, ParseCode::UnknownRef,
                                               "reference to undeclared node '" +
                                                   item.edge.from + "'"});
            resolved = false;
        }
        if (!declared.count(item.edge.to)) {
            result.errors.push_back(ParseError{item.to_span, ParseCode::UnknownRef,
                                               "reference to undeclared node '" + item.edge.to +
                                                   "'"});
            resolved = false;
        }
        if (!resolved) {
            continue;
        }
        if (seen_edges.emplace(item.edge.kind, item.edge.from, item.edge.to).second) {
            edges.push_back(std::move(item.edge));
        }
    }

    std::sort(result.errors.begin(), result.errors.end(), [](const auto& a, const auto& b) {
        return std::tie(a.span.line, a.span.column, a.message) <
               std::tie(b.span.line, b.span.column, b.message);
    });

    if (!result.errors.empty()) {
        return result;
    }
    try {
        result.graph = build_graph(std::move(metadata), std::move(nodes), std::move(edges));
    } catch (const Error& e) {
        result.graph.reset();
        result.errors.push_back(ParseError{SourceSpan{1, 1, 0}, ParseCode::Syntax, e.what()});
    }
    return result;
}

} // namespace detail

ParseResult parse(const std::string& text) {
    return detail::assemble(detail::parse_document(text));
}

} // namespace caseforge
