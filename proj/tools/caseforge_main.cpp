// caseforge: compiler-style toolchain for GSN safety cases.
//
//   caseforge check  <case>      parse + structural rules + lints + coverage
//   caseforge render <case>      DOT / markdown / canonical JSON output
//   caseforge fmt    <case>      canonical DSL layout on stdout
//   caseforge export <case>      canonical JSON on stdout
//   caseforge risk   eval|workflow <spec>
//   caseforge hazlog open|measure|accept|close|report <store>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "caseforge/case_json.hpp"
#include "caseforge/dsl.hpp"
#include "caseforge/hazardlog.hpp"
#include "caseforge/render.hpp"
#include "caseforge/risk.hpp"
#include "caseforge/validator.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

struct LoadedCase {
    caseforge::ArgumentGraph graph;
    std::map<std::string, int> node_lines;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw caseforge::Error(caseforge::ErrorCode::IoError,
                               "cannot read file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_json_case(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

/// Loads .gsn (DSL) or .case.json input. Parse errors print to stderr and
/// exit with a usage/IO failure.
LoadedCase load_case_or_exit(const std::string& path) {
    std::string text = read_file(path);
    LoadedCase loaded;
    if (looks_like_json_case(path)) {
        loaded.graph = caseforge::load_case_json(text);
        return loaded;
    }
    caseforge::ParseResult result = caseforge::parse(text);
    if (!result.ok()) {
        for (const auto& error : result.errors) {
            std::cerr << "error " << caseforge::parse_code_name(error.code) << ' ' << path << ':'
                      << error.span.line << ':' << error.span.column << ": " << error.message
                      << '\n';
        }
        std::exit(kExitUsage);
    }
    loaded.graph = std::move(*result.graph);
    loaded.node_lines = std::move(result.node_lines);
    return loaded;
}

caseforge::RiskConfig load_risk_config_or_default(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv("CASEFORGE_MATRIX")) {
            path = env;
        }
    }
    if (path.empty()) {
        return caseforge::RiskConfig{};
    }
    return caseforge::load_risk_config(read_file(path));
}

caseforge::Date parse_today_flag(const std::string& value) {
    if (value.empty()) {
        return caseforge::today_utc();
    }
    auto date = caseforge::parse_date(value);
    if (!date) {
        throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                               "--today must be YYYY-MM-DD, got '" + value + "'");
    }
    return *date;
}

std::string timestamp_or_now(const std::string& value) {
    if (value.empty()) {
        return caseforge::now_timestamp_utc();
    }
    if (!caseforge::is_valid_timestamp(value)) {
        throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                               "--at must be YYYY-MM-DDThh:mm:ssZ, got '" + value + "'");
    }
    return value;
}

std::set<caseforge::LifecyclePhase> parse_phases_flag(const std::string& value) {
    if (value.empty()) {
        return caseforge::all_lifecycle_phases();
    }
    std::set<caseforge::LifecyclePhase> phases;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item == "development") phases.insert(caseforge::LifecyclePhase::Development);
        else if (item == "deployment") phases.insert(caseforge::LifecyclePhase::Deployment);
        else if (item == "post-deployment")
            phases.insert(caseforge::LifecyclePhase::PostDeployment);
        else
            throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                                   "unknown phase '" + item +
                                       "' (expected development, deployment, post-deployment)");
    }
    return phases;
}

std::set<std::string> parse_code_list(const std::string& value) {
    std::set<std::string> codes;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) codes.insert(item);
    }
    return codes;
}

std::string probability_text(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", p);
    return buf;
}

std::string record_text(const caseforge::RiskRecord& record,
                        const std::optional<double>& probability) {
    std::string out = std::string(caseforge::likelihood_name(record.likelihood)) + " x " +
                      std::string(caseforge::severity_name_of(record.severity)) + " -> " +
                      std::string(caseforge::risk_zone_name(record.zone));
    if (probability) {
        out += " (p=" + probability_text(*probability) + ")";
    }
    return out;
}

json diagnostic_to_json(const caseforge::Diagnostic& diagnostic,
                        const std::map<std::string, int>& node_lines) {
    json out;
    out["severity"] = std::string(caseforge::severity_name(diagnostic.severity));
    out["code"] = diagnostic.code;
    out["nodes"] = diagnostic.nodes;
    out["message"] = diagnostic.message;
    if (!diagnostic.nodes.empty()) {
        auto it = node_lines.find(diagnostic.nodes.front());
        if (it != node_lines.end()) {
            out["line"] = it->second;
        }
    }
    return out;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::string path;
    std::string matrix;
    std::string format = "text";
    std::string no_lint;
    std::string phases;
    std::string today;
    int l01_depth = 2;
    bool strict = false;
};

int run_check(const CheckArgs& args) {
    LoadedCase loaded = load_case_or_exit(args.path);
    const caseforge::ArgumentGraph& graph = loaded.graph;

    caseforge::LintOptions lint_options;
    lint_options.l01_depth = args.l01_depth;
    lint_options.disabled_codes = parse_code_list(args.no_lint);
    caseforge::Date today = parse_today_flag(args.today);
    std::set<caseforge::LifecyclePhase> required = parse_phases_flag(args.phases);

    std::vector<caseforge::Diagnostic> diagnostics = caseforge::check_structure(graph);
    std::vector<caseforge::Diagnostic> lints = caseforge::lint(graph, today, lint_options);
    diagnostics.insert(diagnostics.end(), lints.begin(), lints.end());

    caseforge::CoverageReport coverage;
    bool coverage_computed = false;
    if (!caseforge::has_errors(diagnostics)) {
        coverage = caseforge::check_lifecycle_coverage(graph, required);
        coverage_computed = true;
        diagnostics.insert(diagnostics.end(), coverage.diagnostics.begin(),
                           coverage.diagnostics.end());
    }
    caseforge::sort_diagnostics(diagnostics);

    bool errors = caseforge::has_errors(diagnostics);
    bool warnings = std::any_of(diagnostics.begin(), diagnostics.end(), [](const auto& d) {
        return d.severity == caseforge::Severity::Warning;
    });
    bool fail = errors || !coverage.missing.empty() || (args.strict && warnings);

    if (args.format == "json") {
        json out;
        out["status"] = fail ? "fail" : "pass";
        json diag_array = json::array();
        for (const auto& diagnostic : diagnostics) {
            diag_array.push_back(diagnostic_to_json(diagnostic, loaded.node_lines));
        }
        out["diagnostics"] = std::move(diag_array);
        if (coverage_computed) {
            json buckets;
            for (const auto& [goal, phases] : coverage.buckets) {
                json per_goal;
                for (const auto& [phase, ids] : phases) {
                    per_goal[std::string(caseforge::lifecycle_phase_name(phase))] = ids;
                }
                buckets[goal] = std::move(per_goal);
            }
            json missing = json::array();
            for (const auto& [goal, phase] : coverage.missing) {
                missing.push_back(
                    {goal, std::string(caseforge::lifecycle_phase_name(phase))});
            }
            out["coverage"] = {{"buckets", std::move(buckets)},
                               {"missing", std::move(missing)}};
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& diagnostic : diagnostics) {
            std::cerr << caseforge::render_diagnostic_line(diagnostic, args.path,
                                                           loaded.node_lines)
                      << '\n';
        }
        if (coverage_computed) {
            for (const auto& [goal, phases] : coverage.buckets) {
                std::cout << "coverage " << goal << ":";
                for (const auto& phase : required) {
                    auto it = phases.find(phase);
                    std::cout << ' ' << caseforge::lifecycle_phase_name(phase) << "=[";
                    if (it != phases.end()) {
                        for (std::size_t i = 0; i < it->second.size(); ++i) {
                            if (i) std::cout << ' ';
                            std::cout << it->second[i];
                        }
                    }
                    std::cout << ']';
                }
                std::cout << '\n';
            }
        }
        std::cout << "check: " << (fail ? "FAIL" : "PASS") << '\n';
    }
    return fail ? kExitFindings : kExitPass;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
    std::string path;
    std::string format = "dot";
    std::vector<std::string> highlight;
    bool lifecycle_lanes = false;
};

int run_render(const RenderArgs& args) {
    LoadedCase loaded = load_case_or_exit(args.path);
    auto format = caseforge::render_format_from_name(args.format);
    if (!format) {
        throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                               "unknown render format '" + args.format + "'");
    }

    // structural errors that break traversal prevent rendering
    std::vector<caseforge::Diagnostic> structure = caseforge::check_structure(loaded.graph);
    for (const auto& diagnostic : structure) {
        if (diagnostic.code == "R02") {
            std::cerr << caseforge::render_diagnostic_line(diagnostic, args.path,
                                                           loaded.node_lines)
                      << '\n';
            return kExitFindings;
        }
    }

    caseforge::RenderOptions options;
    options.format = *format;
    options.highlight.insert(args.highlight.begin(), args.highlight.end());
    options.show_lifecycle_lanes = args.lifecycle_lanes;
    try {
        std::cout << caseforge::render_case(loaded.graph, options);
    } catch (const caseforge::Error& e) {
        if (e.code() == caseforge::ErrorCode::PreconditionFailed) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitFindings;
        }
        throw;
    }
    return kExitPass;
}

// ---------------------------------------------------------------- fmt / export

int run_fmt(const std::string& path) {
    std::string text = read_file(path);
    caseforge::FormatResult result = caseforge::format(text);
    if (!result.ok()) {
        for (const auto& error : result.errors) {
            std::cerr << "error " << caseforge::parse_code_name(error.code) << ' ' << path << ':'
                      << error.span.line << ':' << error.span.column << ": " << error.message
                      << '\n';
        }
        return kExitUsage;
    }
    std::cout << *result.text;
    return kExitPass;
}

int run_export(const std::string& path) {
    LoadedCase loaded = load_case_or_exit(path);
    std::cout << caseforge::serialize_canonical(loaded.graph) << '\n';
    return kExitPass;
}

// ---------------------------------------------------------------- risk

struct RiskArgs {
    std::string spec_path;
    std::string matrix;
    std::string format = "text";
    bool strict = false;
};

int run_risk_eval(const RiskArgs& args) {
    caseforge::RiskConfig config = load_risk_config_or_default(args.matrix);
    caseforge::HazardSpec spec = caseforge::load_hazard_spec(read_file(args.spec_path));
    caseforge::RiskRecord initial = caseforge::initial_record(spec, config);
    caseforge::ResidualResult result =
        caseforge::apply_measures(initial, spec.probability, spec.measures, config);
    caseforge::IntegrityTarget target =
        caseforge::map_target_level(initial.zone, initial.severity, config.targets);

    bool requires_acceptance =
        !result.eliminated && result.residual.zone != caseforge::RiskZone::BroadlyAcceptable;

    if (args.format == "json") {
        json out;
        out["hazard"] = spec.hazard;
        out["initial"] = json::parse(R"({})");
        out["initial"]["likelihood"] = std::string(caseforge::likelihood_name(initial.likelihood));
        out["initial"]["severity"] = std::string(caseforge::severity_name_of(initial.severity));
        out["initial"]["zone"] = std::string(caseforge::risk_zone_name(initial.zone));
        if (spec.probability) out["initial"]["probability"] = *spec.probability;
        out["integrity_target"] = {{"level", target.level}, {"note", target.note}};
        json trace = json::array();
        for (const auto& entry : result.trace) {
            json step;
            step["measure"] = entry.measure_id;
            step["before"] = record_text(entry.before, entry.probability_before);
            step["after"] = record_text(entry.after, entry.probability_after);
            trace.push_back(std::move(step));
        }
        out["trace"] = std::move(trace);
        out["residual"] = record_text(result.residual, result.probability);
        out["eliminated"] = result.eliminated;
        out["requires_acceptance"] = requires_acceptance;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "hazard: " << spec.hazard << '\n';
        std::cout << "initial: " << record_text(initial, spec.probability) << '\n';
        std::cout << "integrity target: level " << target.level << " (" << target.note << ")\n";
        for (const auto& entry : result.trace) {
            std::cout << "measure '" << entry.measure_id
                      << "': " << record_text(entry.before, entry.probability_before) << "  =>  "
                      << record_text(entry.after, entry.probability_after) << '\n';
        }
        if (result.eliminated) {
            std::cout << "residual: hazard eliminated\n";
        } else {
            std::cout << "residual: " << record_text(result.residual, result.probability)
                      << '\n';
            if (requires_acceptance) {
                std::cout << "residual risk requires acceptance by the risk owner\n";
            }
        }
    }
    return (args.strict && requires_acceptance) ? kExitFindings : kExitPass;
}

int run_risk_workflow(const RiskArgs& args) {
    caseforge::RiskConfig config = load_risk_config_or_default(args.matrix);
    caseforge::HazardSpec spec = caseforge::load_hazard_spec(read_file(args.spec_path));
    caseforge::RiskRecord initial = caseforge::initial_record(spec, config);
    caseforge::WorkflowTrace trace =
        caseforge::run_workflow(spec.hazard, initial, spec.probability, spec.measures, config);

    if (args.format == "json") {
        json steps = json::array();
        for (const auto& step : trace.steps) {
            json entry;
            entry["step"] = std::string(caseforge::workflow_step_kind_name(step.kind));
            if (!step.text.empty()) entry["text"] = step.text;
            if (step.record) entry["risk"] = record_text(*step.record, step.probability);
            if (step.zone) entry["zone"] = std::string(caseforge::risk_zone_name(*step.zone));
            if (step.outcome)
                entry["outcome"] = std::string(caseforge::workflow_outcome_name(*step.outcome));
            steps.push_back(std::move(entry));
        }
        json out;
        out["hazard"] = spec.hazard;
        out["steps"] = std::move(steps);
        out["outcome"] = std::string(caseforge::workflow_outcome_name(trace.outcome));
        std::cout << out.dump(2) << '\n';
    } else {
        int index = 1;
        for (const auto& step : trace.steps) {
            std::cout << index++ << ". " << caseforge::workflow_step_kind_name(step.kind);
            switch (step.kind) {
            case caseforge::WorkflowStepKind::IdentifyHazard:
            case caseforge::WorkflowStepKind::ApplyMeasure:
                std::cout << ": " << step.text;
                break;
            case caseforge::WorkflowStepKind::EstimateRisk:
                std::cout << ": " << record_text(*step.record, step.probability);
                break;
            case caseforge::WorkflowStepKind::EvaluateRisk:
                std::cout << ": " << caseforge::risk_zone_name(*step.zone);
                break;
            case caseforge::WorkflowStepKind::Terminate:
                std::cout << ": " << caseforge::workflow_outcome_name(*step.outcome);
                break;
            }
            std::cout << '\n';
        }
    }
    bool residual = trace.outcome == caseforge::WorkflowOutcome::ResidualRequiresAcceptance;
    return (args.strict && residual) ? kExitFindings : kExitPass;
}

// ---------------------------------------------------------------- hazlog

void print_entry(const caseforge::HazardLogEntry& entry) {
    std::cout << entry.id << " [" << caseforge::hazard_status_name(entry.status) << "] "
              << entry.hazard;
    if (entry.hazardous_event_goal) {
        std::cout << " (goal " << *entry.hazardous_event_goal << ")";
    }
    std::cout << '\n';
    std::cout << "  created: " << entry.created << "  updated: " << entry.updated << '\n';
    if (!entry.measure_ids.empty()) {
        std::cout << "  measures:";
        for (const auto& id : entry.measure_ids) {
            std::cout << ' ' << id;
        }
        std::cout << '\n';
    }
    for (const auto& record : entry.risk_history) {
        std::cout << "  risk: " << record_text(record, std::nullopt);
        if (!record.note.empty()) std::cout << " — " << record.note;
        std::cout << '\n';
    }
    if (entry.eliminated) {
        std::cout << "  hazard eliminated\n";
    }
    if (entry.acceptance) {
        std::cout << "  accepted by " << entry.acceptance->owner << " at "
                  << entry.acceptance->timestamp << ": " << entry.acceptance->rationale << '\n';
    }
}

caseforge::LogStore load_store(const std::string& path, bool must_exist) {
    std::ifstream probe(path);
    if (!probe) {
        if (must_exist) {
            throw caseforge::Error(caseforge::ErrorCode::IoError,
                                   "cannot read hazard log store '" + path + "'");
        }
        return caseforge::LogStore{};
    }
    probe.close();
    return caseforge::LogStore::load_file(path);
}

struct HazlogArgs {
    std::string store;
    std::string hazard;
    std::string goal;
    std::string case_path;
    std::string id;
    std::string at;
    std::string entry;
    std::string measure_id;
    std::string kind;
    std::string phase;
    std::string desc;
    std::string owner;
    std::string rationale;
    std::string matrix;
    std::string likelihood;
    std::string severity;
    std::string format = "text";
    double factor = 0.0;
    int steps = 0;
    int severity_steps = 0;
};

int run_hazlog_open(const HazlogArgs& args) {
    caseforge::LogStore store = load_store(args.store, false);
    std::optional<std::string> goal;
    std::optional<LoadedCase> linked;
    if (!args.case_path.empty()) {
        linked = load_case_or_exit(args.case_path);
    }
    if (!args.goal.empty()) {
        if (!linked) {
            throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                                   "--goal requires --case to resolve the goal id");
        }
        goal = args.goal;
    }
    const caseforge::HazardLogEntry& entry =
        store.open_entry(args.hazard, goal, timestamp_or_now(args.at),
                         linked ? &linked->graph : nullptr, args.id);
    store.save_file(args.store);
    print_entry(entry);
    return kExitPass;
}

caseforge::LikelihoodLevel parse_likelihood_flag(const std::string& value) {
    static const std::map<std::string, caseforge::LikelihoodLevel> table{
        {"rare", caseforge::LikelihoodLevel::Rare},
        {"unlikely", caseforge::LikelihoodLevel::Unlikely},
        {"possible", caseforge::LikelihoodLevel::Possible},
        {"likely", caseforge::LikelihoodLevel::Likely},
        {"almost-certain", caseforge::LikelihoodLevel::AlmostCertain},
    };
    auto it = table.find(value);
    if (it == table.end()) {
        throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                               "unknown likelihood '" + value + "'");
    }
    return it->second;
}

caseforge::SeverityLevel parse_severity_flag(const std::string& value) {
    static const std::map<std::string, caseforge::SeverityLevel> table{
        {"negligible", caseforge::SeverityLevel::Negligible},
        {"minor", caseforge::SeverityLevel::Minor},
        {"major", caseforge::SeverityLevel::Major},
        {"severe", caseforge::SeverityLevel::Severe},
        {"catastrophic", caseforge::SeverityLevel::Catastrophic},
    };
    auto it = table.find(value);
    if (it == table.end()) {
        throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                               "unknown severity '" + value + "'");
    }
    return it->second;
}

int run_hazlog_measure(const HazlogArgs& args) {
    caseforge::LogStore store = load_store(args.store, true);
    caseforge::RiskConfig config = load_risk_config_or_default(args.matrix);

    caseforge::RiskReductionMeasure measure;
    measure.id = args.measure_id;
    measure.description = args.desc;
    if (args.kind == "eliminate") measure.kind = caseforge::MeasureKind::Eliminate;
    else if (args.kind == "modify")
        measure.kind = caseforge::MeasureKind::ModifyDesignOrOperation;
    else if (args.kind == "reduce-severity")
        measure.kind = caseforge::MeasureKind::ReduceSeverity;
    else
        throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                               "--kind must be eliminate, modify or reduce-severity");
    if (args.phase == "development") measure.phase = caseforge::LifecyclePhase::Development;
    else if (args.phase == "deployment") measure.phase = caseforge::LifecyclePhase::Deployment;
    else if (args.phase == "post-deployment")
        measure.phase = caseforge::LifecyclePhase::PostDeployment;
    else
        throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                               "--phase must be development, deployment or post-deployment");
    if (args.factor > 0.0) measure.likelihood_factor = args.factor;
    measure.likelihood_steps = args.steps;
    measure.severity_steps = args.severity_steps;

    caseforge::RiskRecord resulting;
    if (measure.kind == caseforge::MeasureKind::Eliminate && args.likelihood.empty()) {
        resulting = caseforge::make_risk_record(caseforge::LikelihoodLevel::Rare,
                                                caseforge::SeverityLevel::Negligible,
                                                config.matrix, "hazard eliminated");
    } else {
        if (args.likelihood.empty() || args.severity.empty()) {
            throw caseforge::Error(caseforge::ErrorCode::SchemaError,
                                   "--likelihood and --severity describe the resulting risk");
        }
        resulting = caseforge::make_risk_record(parse_likelihood_flag(args.likelihood),
                                                parse_severity_flag(args.severity),
                                                config.matrix, {});
    }
    const caseforge::HazardLogEntry& entry =
        store.record_measure(args.entry, measure, resulting, timestamp_or_now(args.at));
    store.save_file(args.store);
    print_entry(entry);
    return kExitPass;
}

int run_hazlog_accept(const HazlogArgs& args) {
    caseforge::LogStore store = load_store(args.store, true);
    LoadedCase linked = load_case_or_exit(args.case_path);
    const caseforge::HazardLogEntry& entry =
        store.accept_residual(args.entry, args.owner, args.rationale,
                              linked.graph.metadata().risk_owner, timestamp_or_now(args.at));
    store.save_file(args.store);
    print_entry(entry);
    return kExitPass;
}

int run_hazlog_close(const HazlogArgs& args) {
    caseforge::LogStore store = load_store(args.store, true);
    const caseforge::HazardLogEntry& entry =
        store.close_entry(args.entry, timestamp_or_now(args.at));
    store.save_file(args.store);
    print_entry(entry);
    return kExitPass;
}

int run_hazlog_report(const HazlogArgs& args) {
    caseforge::LogStore store = load_store(args.store, true);
    std::optional<LoadedCase> linked;
    if (!args.case_path.empty()) {
        linked = load_case_or_exit(args.case_path);
    }
    caseforge::LogReport result =
        caseforge::report(store, linked ? &linked->graph : nullptr);

    if (args.format == "json") {
        json out;
        json counts;
        for (const auto& [status, count] : result.status_counts) {
            counts[std::string(caseforge::hazard_status_name(status))] = count;
        }
        out["status_counts"] = std::move(counts);
        out["open_unacceptable"] = result.open_unacceptable;
        out["unlinked_entries"] = result.unlinked_entries;
        if (result.cross_checked) {
            out["unlogged_goals"] = result.unlogged_goals;
        }
        json accepted = json::array();
        for (const auto& entry : store.entries()) {
            if (entry.acceptance) {
                accepted.push_back({{"entry", entry.id},
                                    {"owner", entry.acceptance->owner},
                                    {"timestamp", entry.acceptance->timestamp},
                                    {"rationale", entry.acceptance->rationale}});
            }
        }
        out["accepted_residual_risks"] = std::move(accepted);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "hazard log: " << store.entries().size() << " entries\n";
        for (const auto& [status, count] : result.status_counts) {
            std::cout << "  " << caseforge::hazard_status_name(status) << ": " << count << '\n';
        }
        if (!result.open_unacceptable.empty()) {
            std::cout << "open unacceptable hazards:";
            for (const auto& id : result.open_unacceptable) std::cout << ' ' << id;
            std::cout << '\n';
        }
        if (!result.unlinked_entries.empty()) {
            std::cout << "entries lacking a goal link:";
            for (const auto& id : result.unlinked_entries) std::cout << ' ' << id;
            std::cout << '\n';
        }
        if (result.cross_checked && !result.unlogged_goals.empty()) {
            std::cout << "hazardous-event goals lacking a log entry:";
            for (const auto& id : result.unlogged_goals) std::cout << ' ' << id;
            std::cout << '\n';
        }
        bool header = false;
        for (const auto& entry : store.entries()) {
            if (!entry.acceptance) continue;
            if (!header) {
                std::cout << "accepted residual risks:\n";
                header = true;
            }
            std::cout << "  " << entry.id << ": owner=" << entry.acceptance->owner << " at="
                      << entry.acceptance->timestamp
                      << " rationale=" << entry.acceptance->rationale << '\n';
        }
    }
    return kExitPass;
}

int exit_code_for(const caseforge::Error& error) {
    switch (error.code()) {
    case caseforge::ErrorCode::IllegalTransition:
    case caseforge::ErrorCode::WrongOwner:
    case caseforge::ErrorCode::NothingToAccept:
    case caseforge::ErrorCode::CannotRemoveRoot:
    case caseforge::ErrorCode::PreconditionFailed:
        return kExitFindings;
    default:
        return kExitUsage;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"caseforge: toolchain for machine-readable AI safety cases"};
    app.require_subcommand(1);

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "validate a safety case");
    check->add_option("case", check_args.path, "path to .gsn or .case.json")->required();
    check->add_option("--matrix", check_args.matrix, "risk configuration file");
    check->add_option("--format", check_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("--no-lint", check_args.no_lint, "comma-separated lint codes to disable");
    check->add_option("--phases", check_args.phases,
                      "required coverage phases (comma-separated)");
    check->add_option("--l01-depth", check_args.l01_depth,
                      "goal depth subject to the bare-evidence lint (root = 1)");
    check->add_option("--today", check_args.today, "reference date for staleness (YYYY-MM-DD)");
    check->add_flag("--strict", check_args.strict, "fail on warnings as well");

    RenderArgs render_args;
    CLI::App* render = app.add_subcommand("render", "render a case as dot/markdown/json");
    render->add_option("case", render_args.path)->required();
    render->add_option("--format", render_args.format)
        ->check(CLI::IsMember({"dot", "markdown", "json"}));
    render->add_option("--highlight", render_args.highlight, "node ids to highlight");
    render->add_flag("--lifecycle-lanes", render_args.lifecycle_lanes,
                     "cluster hazardous-event subtrees by lifecycle phase");

    std::string fmt_path;
    CLI::App* fmt = app.add_subcommand("fmt", "print canonical DSL layout");
    fmt->add_option("case", fmt_path)->required();

    std::string export_path;
    CLI::App* exp = app.add_subcommand("export", "print canonical JSON");
    exp->add_option("case", export_path)->required();

    RiskArgs risk_args;
    CLI::App* risk = app.add_subcommand("risk", "risk classification and reduction workflow");
    risk->require_subcommand(1);
    CLI::App* risk_eval = risk->add_subcommand("eval", "apply measures, report residual risk");
    CLI::App* risk_workflow = risk->add_subcommand("workflow", "run the risk reduction loop");
    for (CLI::App* sub : {risk_eval, risk_workflow}) {
        sub->add_option("spec", risk_args.spec_path, "hazard spec JSON")->required();
        sub->add_option("--matrix", risk_args.matrix, "risk configuration file");
        sub->add_option("--format", risk_args.format)->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--strict", risk_args.strict,
                      "exit 1 when residual risk requires acceptance");
    }

    HazlogArgs hazlog_args;
    CLI::App* hazlog = app.add_subcommand("hazlog", "through-life hazard log");
    hazlog->require_subcommand(1);

    CLI::App* hz_open = hazlog->add_subcommand("open", "open a new hazard entry");
    hz_open->add_option("store", hazlog_args.store)->required();
    hz_open->add_option("--hazard", hazlog_args.hazard, "hazard description")->required();
    hz_open->add_option("--goal", hazlog_args.goal, "hazardous-event goal id");
    hz_open->add_option("--case", hazlog_args.case_path, "safety case for goal resolution");
    hz_open->add_option("--id", hazlog_args.id, "explicit entry id");
    hz_open->add_option("--at", hazlog_args.at, "timestamp override (ISO-8601 UTC)");

    CLI::App* hz_measure = hazlog->add_subcommand("measure", "record a risk reduction measure");
    hz_measure->add_option("store", hazlog_args.store)->required();
    hz_measure->add_option("--entry", hazlog_args.entry)->required();
    hz_measure->add_option("--measure", hazlog_args.measure_id, "measure id")->required();
    hz_measure->add_option("--kind", hazlog_args.kind, "eliminate|modify|reduce-severity")
        ->required();
    hz_measure->add_option("--phase", hazlog_args.phase,
                           "development|deployment|post-deployment")
        ->required();
    hz_measure->add_option("--factor", hazlog_args.factor, "likelihood division factor");
    hz_measure->add_option("--steps", hazlog_args.steps, "likelihood step decrement");
    hz_measure->add_option("--severity-steps", hazlog_args.severity_steps,
                           "severity step decrement");
    hz_measure->add_option("--desc", hazlog_args.desc, "measure description");
    hz_measure->add_option("--likelihood", hazlog_args.likelihood, "resulting likelihood");
    hz_measure->add_option("--severity", hazlog_args.severity, "resulting severity");
    hz_measure->add_option("--matrix", hazlog_args.matrix, "risk configuration file");
    hz_measure->add_option("--at", hazlog_args.at);

    CLI::App* hz_accept = hazlog->add_subcommand("accept", "accept residual risk");
    hz_accept->add_option("store", hazlog_args.store)->required();
    hz_accept->add_option("--entry", hazlog_args.entry)->required();
    hz_accept->add_option("--owner", hazlog_args.owner)->required();
    hz_accept->add_option("--rationale", hazlog_args.rationale)->required();
    hz_accept->add_option("--case", hazlog_args.case_path, "case naming the risk owner")
        ->required();
    hz_accept->add_option("--at", hazlog_args.at);

    CLI::App* hz_close = hazlog->add_subcommand("close", "close an entry");
    hz_close->add_option("store", hazlog_args.store)->required();
    hz_close->add_option("--entry", hazlog_args.entry)->required();
    hz_close->add_option("--at", hazlog_args.at);

    CLI::App* hz_report = hazlog->add_subcommand("report", "per-status counts and cross-checks");
    hz_report->add_option("store", hazlog_args.store)->required();
    hz_report->add_option("--case", hazlog_args.case_path, "cross-check against this case");
    hz_report->add_option("--format", hazlog_args.format)
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(check_args);
        if (render->parsed()) return run_render(render_args);
        if (fmt->parsed()) return run_fmt(fmt_path);
        if (exp->parsed()) return run_export(export_path);
        if (risk->parsed()) {
            if (risk_eval->parsed()) return run_risk_eval(risk_args);
            return run_risk_workflow(risk_args);
        }
        if (hazlog->parsed()) {
            if (hz_open->parsed()) return run_hazlog_open(hazlog_args);
            if (hz_measure->parsed()) return run_hazlog_measure(hazlog_args);
            if (hz_accept->parsed()) return run_hazlog_accept(hazlog_args);
            if (hz_close->parsed()) return run_hazlog_close(hazlog_args);
            return run_hazlog_report(hazlog_args);
        }
    } catch (const caseforge::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
