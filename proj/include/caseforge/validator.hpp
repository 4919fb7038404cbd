#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "caseforge/argument.hpp"

namespace caseforge {

enum class Severity {
    Error,
    Warning,
    Info,
};

std::string_view severity_name(Severity severity);

/// One finding from structural checking, linting or coverage checking.
/// Codes come from the documented catalogue: R01-R10, L01-L04, COV01-COV02.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::vector<std::string> nodes;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

/// Orders by (severity, code, first node id, message); applied to every
/// diagnostic list the validator returns so output is byte-stable.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// `<severity> <code> <file>:<line>: <message> [<node ids>]`
std::string render_diagnostic_line(const Diagnostic& diagnostic, const std::string& file,
                                   const std::map<std::string, int>& node_lines);

/// Structural GSN rules R01-R10. Findings are the output, not failures.
///
///   R01 exactly one root Goal                        (Error)
///   R02 SupportedBy relation is acyclic              (Error)
///   R03 edge kinds legal per composition table       (Error)
///   R04 Solutions have no outgoing SupportedBy       (Error)
///   R05 leaf Goals flagged Undeveloped or supported  (Error)
///   R06 Strategies hold >=1 supporting Goal          (Error)
///   R07 Context/Assumption/Justification stay out of SupportedBy (Error)
///   R08 Uninstantiated statement has a {placeholder} (Error)
///   R09 nodes unreachable from the root              (Warning)
///   R10 Solution lacks an evidence reference         (Warning)
std::vector<Diagnostic> check_structure(const ArgumentGraph& graph);

struct LintOptions {
    /// Goals at depth <= l01_depth from the root (root = depth 1) are
    /// subject to L01 in addition to hazardous-event goals.
    int l01_depth = 2;
    std::set<std::string> disabled_codes;
};

/// Lint rules L01-L04.
///
///   L01 hazard-level or shallow Goal argued by bare evidence only (Warning)
///   L02 evidence past its validity window                         (Warning)
///   L03 Context attached to nothing                               (Info)
///   L04 root goal defines no key terms via InContextOf            (Warning)
std::vector<Diagnostic> lint(const ArgumentGraph& graph, const Date& today,
                             const LintOptions& options = {});

std::set<LifecyclePhase> all_lifecycle_phases();

/// Through-life coverage of each hazardous-event goal.
struct CoverageReport {
    /// hazardous goal id -> phase -> supporting Goal/Strategy ids (sorted).
    std::map<std::string, std::map<LifecyclePhase, std::vector<std::string>>> buckets;
    /// exactly the (goal, phase) pairs whose bucket is empty
    std::set<std::pair<std::string, LifecyclePhase>> missing;
    std::vector<Diagnostic> diagnostics; // COV01 Error, COV02 Warning
};

/// Buckets the Goal/Strategy closure of every hazardous-event goal by
/// lifecycle phase; untagged nodes inherit the nearest tagged ancestor's
/// phase along the traversal. Requires R01 and R02 to hold
/// (throws PreconditionFailed otherwise).
CoverageReport check_lifecycle_coverage(const ArgumentGraph& graph,
                                        const std::set<LifecyclePhase>& required_phases =
                                            all_lifecycle_phases());

struct EvidenceTrace {
    std::string solution_id;
    std::optional<EvidenceRef> evidence;
    std::vector<std::string> path; // one shortest SupportedBy path, goal first

    bool operator==(const EvidenceTrace&) const = default;
};

/// Every Solution reachable from goal_id, each with one shortest SupportedBy
/// path; sorted by solution id. Throws UnknownNode / NotAGoal.
std::vector<EvidenceTrace> trace_evidence(const ArgumentGraph& graph, const std::string& goal_id);

struct ImpactReport {
    std::vector<std::string> newly_undeveloped_goals;
    std::vector<std::pair<std::string, LifecyclePhase>> newly_uncovered;
    std::vector<std::string> orphaned_nodes;

    bool empty() const {
        return newly_undeveloped_goals.empty() && newly_uncovered.empty() &&
               orphaned_nodes.empty();
    }
};

/// Copy of the graph with node_id and its incident edges removed (the id is
/// also dropped from hazardous_event_goals). Throws UnknownNode.
ArgumentGraph graph_without_node(const ArgumentGraph& graph, const std::string& node_id);

/// Impact of deleting node_id: the delta between re-validating the mutated
/// graph and validating the original. The input graph is untouched.
/// Throws UnknownNode / CannotRemoveRoot (sole root goal).
ImpactReport what_if_remove(const ArgumentGraph& graph, const std::string& node_id);

} // namespace caseforge
