#include "caseforge/risk.hpp"

#include <algorithm>
#include <cmath>

#include "json_common.hpp"

namespace caseforge {

namespace {

constexpr double kProbabilityEpsilon = 1e-12;

int level_int(LikelihoodLevel level) { return static_cast<int>(level); }
int level_int(SeverityLevel level) { return static_cast<int>(level); }

LikelihoodLevel likelihood_from_int(int value) {
    return static_cast<LikelihoodLevel>(std::clamp(value, 1, 5));
}

SeverityLevel severity_from_int(int value) {
    return static_cast<SeverityLevel>(std::clamp(value, 1, 5));
}

} // namespace

std::string_view likelihood_name(LikelihoodLevel level) {
    switch (level) {
    case LikelihoodLevel::Rare: return "Rare";
    case LikelihoodLevel::Unlikely: return "Unlikely";
    case LikelihoodLevel::Possible: return "Possible";
    case LikelihoodLevel::Likely: return "Likely";
    case LikelihoodLevel::AlmostCertain: return "AlmostCertain";
    }
    return "Rare";
}

std::string_view severity_name_of(SeverityLevel level) {
    switch (level) {
    case SeverityLevel::Negligible: return "Negligible";
    case SeverityLevel::Minor: return "Minor";
    case SeverityLevel::Major: return "Major";
    case SeverityLevel::Severe: return "Severe";
    case SeverityLevel::Catastrophic: return "Catastrophic";
    }
    return "Negligible";
}

std::string_view risk_zone_name(RiskZone zone) {
    switch (zone) {
    case RiskZone::Unacceptable: return "Unacceptable";
    case RiskZone::TolerableALARP: return "TolerableALARP";
    case RiskZone::BroadlyAcceptable: return "BroadlyAcceptable";
    }
    return "Unacceptable";
}

std::optional<LikelihoodLevel> likelihood_from_name(const std::string& name) {
    for (int i = 1; i <= 5; ++i) {
        auto level = static_cast<LikelihoodLevel>(i);
        if (name == likelihood_name(level)) return level;
    }
    return std::nullopt;
}

std::optional<SeverityLevel> severity_from_name(const std::string& name) {
    for (int i = 1; i <= 5; ++i) {
        auto level = static_cast<SeverityLevel>(i);
        if (name == severity_name_of(level)) return level;
    }
    return std::nullopt;
}

std::optional<RiskZone> risk_zone_from_name(const std::string& name) {
    for (RiskZone zone : {RiskZone::Unacceptable, RiskZone::TolerableALARP,
                          RiskZone::BroadlyAcceptable}) {
        if (name == risk_zone_name(zone)) return zone;
    }
    return std::nullopt;
}

int zone_badness(RiskZone zone) {
    switch (zone) {
    case RiskZone::Unacceptable: return 2;
    case RiskZone::TolerableALARP: return 1;
    case RiskZone::BroadlyAcceptable: return 0;
    }
    return 2;
}

LikelihoodBands default_likelihood_bands() {
    return LikelihoodBands{{0.001, 0.01, 0.1, 0.5, 1.0}};
}

namespace {

void validate_bands(const LikelihoodBands& bands) {
    double previous = 0.0;
    for (double upper : bands.upper) {
        if (!(upper > previous)) {
            throw Error(ErrorCode::InvalidMatrix,
                        "likelihood bands must be strictly increasing over (0, 1]");
        }
        previous = upper;
    }
    if (std::abs(bands.upper.back() - 1.0) > kProbabilityEpsilon) {
        throw Error(ErrorCode::InvalidMatrix, "likelihood bands must end at 1.0");
    }
}

} // namespace

LikelihoodLevel map_probability(double p, const LikelihoodBands& bands) {
    if (!(p > 0.0) || p > 1.0 + kProbabilityEpsilon) {
        throw Error(ErrorCode::OutOfRange,
                    "probability " + detail::format_probability(p) + " outside (0, 1]");
    }
    for (int i = 0; i < 5; ++i) {
        if (p <= bands.upper[static_cast<std::size_t>(i)] + kProbabilityEpsilon) {
            return static_cast<LikelihoodLevel>(i + 1);
        }
    }
    return LikelihoodLevel::AlmostCertain;
}

RiskMatrix RiskMatrix::from_cells(const std::array<std::array<RiskZone, 5>, 5>& cells) {
    // monotone: raising likelihood or severity never yields a more
    // acceptable zone
    for (int l = 0; l < 5; ++l) {
        for (int s = 0; s < 5; ++s) {
            if (l + 1 < 5 && zone_badness(cells[l + 1][s]) < zone_badness(cells[l][s])) {
                throw Error(ErrorCode::InvalidMatrix,
                            "matrix not monotone in likelihood at row " + std::to_string(l + 1));
            }
            if (s + 1 < 5 && zone_badness(cells[l][s + 1]) < zone_badness(cells[l][s])) {
                throw Error(ErrorCode::InvalidMatrix,
                            "matrix not monotone in severity at column " + std::to_string(s + 1));
            }
        }
    }
    RiskMatrix matrix;
    matrix.cells_ = cells;
    return matrix;
}

RiskMatrix RiskMatrix::defaults() {
    std::array<std::array<RiskZone, 5>, 5> cells{};
    for (int l = 1; l <= 5; ++l) {
        for (int s = 1; s <= 5; ++s) {
            RiskZone zone;
            if (l + s >= 8) {
                zone = RiskZone::Unacceptable;
            } else if (l + s <= 4 && s < level_int(SeverityLevel::Catastrophic)) {
                zone = RiskZone::BroadlyAcceptable;
            } else {
                zone = RiskZone::TolerableALARP;
            }
            cells[l - 1][s - 1] = zone;
        }
    }
    return from_cells(cells);
}

RiskZone RiskMatrix::at(LikelihoodLevel likelihood, SeverityLevel severity) const {
    return cells_[static_cast<std::size_t>(level_int(likelihood) - 1)]
                 [static_cast<std::size_t>(level_int(severity) - 1)];
}

RiskZone classify(LikelihoodLevel likelihood, SeverityLevel severity, const RiskMatrix& matrix) {
    return matrix.at(likelihood, severity);
}

RiskRecord make_risk_record(LikelihoodLevel likelihood, SeverityLevel severity,
                            const RiskMatrix& matrix, std::string note) {
    RiskRecord record;
    record.likelihood = likelihood;
    record.severity = severity;
    record.zone = matrix.at(likelihood, severity);
    record.note = std::move(note);
    return record;
}

std::string_view measure_kind_name(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::Eliminate: return "Eliminate";
    case MeasureKind::ModifyDesignOrOperation: return "ModifyDesignOrOperation";
    case MeasureKind::ReduceSeverity: return "ReduceSeverity";
    }
    return "Eliminate";
}

std::optional<MeasureKind> measure_kind_from_name(const std::string& name) {
    for (MeasureKind kind : {MeasureKind::Eliminate, MeasureKind::ModifyDesignOrOperation,
                             MeasureKind::ReduceSeverity}) {
        if (name == measure_kind_name(kind)) return kind;
    }
    return std::nullopt;
}

void validate_measure(const RiskReductionMeasure& measure) {
    if (measure.id.empty()) {
        throw Error(ErrorCode::InvalidMeasure, "measure id must not be empty");
    }
    if (measure.likelihood_steps < 0 || measure.severity_steps < 0) {
        throw Error(ErrorCode::InvalidMeasure,
                    "measure '" + measure.id + "' has negative step counts");
    }
    if (measure.likelihood_factor && !(*measure.likelihood_factor >= 1.0)) {
        throw Error(ErrorCode::InvalidMeasure,
                    "measure '" + measure.id + "' likelihood factor must be >= 1");
    }
    switch (measure.kind) {
    case MeasureKind::Eliminate:
        break; // reductions ignored, nothing to require
    case MeasureKind::ReduceSeverity:
        if (measure.severity_steps < 1) {
            throw Error(ErrorCode::InvalidMeasure,
                        "ReduceSeverity measure '" + measure.id +
                            "' must decrement severity by at least one step");
        }
        break;
    case MeasureKind::ModifyDesignOrOperation:
        if (measure.likelihood_steps < 1 &&
            !(measure.likelihood_factor && *measure.likelihood_factor > 1.0)) {
            throw Error(ErrorCode::InvalidMeasure,
                        "ModifyDesignOrOperation measure '" + measure.id +
                            "' must reduce likelihood by a step or a factor > 1");
        }
        break;
    }
}

TargetTable default_target_table() {
    TargetTable table;
    table.levels[zone_badness(RiskZone::Unacceptable)] = {2, 2, 3, 4, 4};
    table.levels[zone_badness(RiskZone::TolerableALARP)] = {1, 1, 2, 3, 4};
    table.levels[zone_badness(RiskZone::BroadlyAcceptable)] = {1, 1, 1, 1, 1};
    return table;
}

IntegrityTarget map_target_level(RiskZone zone_before, SeverityLevel severity,
                                 const TargetTable& table) {
    IntegrityTarget target;
    target.level = table.levels[static_cast<std::size_t>(zone_badness(zone_before))]
                               [static_cast<std::size_t>(level_int(severity) - 1)];
    switch (zone_before) {
    case RiskZone::Unacceptable:
        target.note = "risk is unacceptable; reduction to at least the tolerable region is "
                      "required before acceptance can be considered";
        break;
    case RiskZone::TolerableALARP:
        target.note = "risk is tolerable only if reduced as low as reasonably practicable; "
                      "document the reduction argument";
        break;
    case RiskZone::BroadlyAcceptable:
        target.note = "risk is broadly acceptable; no further reduction required";
        break;
    }
    return target;
}

namespace {

struct RiskState {
    RiskRecord record;
    std::optional<double> probability;
    bool eliminated = false;
};

RiskState eliminate_state(const RiskConfig& config) {
    RiskState state;
    state.record = make_risk_record(LikelihoodLevel::Rare, SeverityLevel::Negligible,
                                    config.matrix, "hazard eliminated");
    state.probability.reset();
    state.eliminated = true;
    return state;
}

RiskState apply_single(const RiskState& current, const RiskReductionMeasure& measure,
                       const RiskConfig& config) {
    if (measure.kind == MeasureKind::Eliminate) {
        return eliminate_state(config);
    }
    RiskState next = current;
    int level = level_int(current.record.likelihood);
    if (measure.likelihood_factor) {
        if (!current.probability) {
            throw Error(ErrorCode::MissingProbability,
                        "measure '" + measure.id +
                            "' divides a probability, but none was supplied");
        }
        if (!config.bands) {
            throw Error(ErrorCode::BandsUnconfigured,
                        "probability re-banding requires likelihood bands");
        }
        double divided = *current.probability / *measure.likelihood_factor;
        next.probability = divided;
        level = level_int(map_probability(divided, *config.bands));
    }
    level = std::max(1, level - measure.likelihood_steps);
    int severity = std::max(1, level_int(current.record.severity) - measure.severity_steps);
    next.record = make_risk_record(likelihood_from_int(level), severity_from_int(severity),
                                   config.matrix, "after measure '" + measure.id + "'");
    return next;
}

void validate_measure_plan(const RiskRecord&, const std::optional<double>& probability,
                           const std::vector<RiskReductionMeasure>& measures,
                           const RiskConfig& config) {
    for (const auto& measure : measures) {
        validate_measure(measure);
    }
    bool any_factor = std::any_of(measures.begin(), measures.end(), [](const auto& m) {
        return m.kind != MeasureKind::Eliminate && m.likelihood_factor.has_value();
    });
    if (any_factor && !probability) {
        throw Error(ErrorCode::MissingProbability,
                    "a factor-style measure requires a numeric initial probability");
    }
    if (any_factor && !config.bands) {
        throw Error(ErrorCode::BandsUnconfigured,
                    "factor-style measures require configured likelihood bands");
    }
    if (probability) {
        validate_bands(config.bands ? *config.bands : default_likelihood_bands());
    }
}

} // namespace

ResidualResult apply_measures(const RiskRecord& initial, std::optional<double> probability,
                              const std::vector<RiskReductionMeasure>& measures,
                              const RiskConfig& config) {
    validate_measure_plan(initial, probability, measures, config);

    RiskState state;
    state.record = make_risk_record(initial.likelihood, initial.severity, config.matrix,
                                    initial.note);
    state.probability = probability;

    ResidualResult result;
    for (const auto& measure : measures) {
        MeasureTraceEntry entry;
        entry.measure_id = measure.id;
        entry.before = state.record;
        entry.probability_before = state.probability;
        state = apply_single(state, measure, config);
        entry.after = state.record;
        entry.probability_after = state.probability;
        result.trace.push_back(std::move(entry));
        if (state.eliminated) {
            break; // remaining measures are moot
        }
    }
    result.eliminated = state.eliminated;
    result.residual = state.record;
    result.probability = state.probability;
    return result;
}

std::string_view workflow_outcome_name(WorkflowOutcome outcome) {
    switch (outcome) {
    case WorkflowOutcome::Eliminated: return "Eliminated";
    case WorkflowOutcome::Tolerable: return "Tolerable";
    case WorkflowOutcome::ResidualRequiresAcceptance: return "ResidualRequiresAcceptance";
    }
    return "Tolerable";
}

std::string_view workflow_step_kind_name(WorkflowStepKind kind) {
    switch (kind) {
    case WorkflowStepKind::IdentifyHazard: return "IdentifyHazard";
    case WorkflowStepKind::EstimateRisk: return "EstimateRisk";
    case WorkflowStepKind::EvaluateRisk: return "EvaluateRisk";
    case WorkflowStepKind::ApplyMeasure: return "ApplyMeasure";
    case WorkflowStepKind::Terminate: return "Terminate";
    }
    return "IdentifyHazard";
}

WorkflowTrace run_workflow(const std::string& hazard, const RiskRecord& initial,
                           std::optional<double> probability,
                           const std::vector<RiskReductionMeasure>& measures,
                           const RiskConfig& config) {
    validate_measure_plan(initial, probability, measures, config);

    WorkflowTrace trace;
    WorkflowStep identify;
    identify.kind = WorkflowStepKind::IdentifyHazard;
    identify.text = hazard;
    trace.steps.push_back(std::move(identify));

    RiskState state;
    state.record = make_risk_record(initial.likelihood, initial.severity, config.matrix,
                                    initial.note);
    state.probability = probability;

    auto estimate_and_evaluate = [&]() {
        WorkflowStep estimate;
        estimate.kind = WorkflowStepKind::EstimateRisk;
        estimate.record = state.record;
        estimate.probability = state.probability;
        trace.steps.push_back(std::move(estimate));

        WorkflowStep evaluate;
        evaluate.kind = WorkflowStepKind::EvaluateRisk;
        evaluate.zone = state.record.zone;
        trace.steps.push_back(std::move(evaluate));
    };

    auto terminate = [&](WorkflowOutcome outcome) {
        WorkflowStep step;
        step.kind = WorkflowStepKind::Terminate;
        step.outcome = outcome;
        trace.steps.push_back(std::move(step));
        trace.outcome = outcome;
    };

    std::size_t next_measure = 0;
    while (true) {
        estimate_and_evaluate();
        if (state.eliminated) {
            terminate(WorkflowOutcome::Eliminated);
            break;
        }
        if (state.record.zone == RiskZone::BroadlyAcceptable) {
            terminate(WorkflowOutcome::Tolerable);
            break;
        }
        if (next_measure >= measures.size()) {
            terminate(WorkflowOutcome::ResidualRequiresAcceptance);
            break;
        }
        const RiskReductionMeasure& measure = measures[next_measure++];
        WorkflowStep apply;
        apply.kind = WorkflowStepKind::ApplyMeasure;
        apply.text = measure.id;
        trace.steps.push_back(std::move(apply));

        MeasureTraceEntry entry;
        entry.measure_id = measure.id;
        entry.before = state.record;
        entry.probability_before = state.probability;
        state = apply_single(state, measure, config);
        entry.after = state.record;
        entry.probability_after = state.probability;
        trace.residual.trace.push_back(std::move(entry));
    }

    trace.residual.eliminated = state.eliminated;
    trace.residual.residual = state.record;
    trace.residual.probability = state.probability;
    return trace;
}

namespace {

using detail::Json;
using detail::schema_error;

LikelihoodBands bands_from_json(const Json& value) {
    if (!value.is_array() || value.size() != 5) {
        schema_error("'likelihood_bands' must be an array of five upper bounds");
    }
    LikelihoodBands bands{};
    for (std::size_t i = 0; i < 5; ++i) {
        if (!value[i].is_number()) {
            schema_error("'likelihood_bands' entries must be numbers");
        }
        bands.upper[i] = value[i].get<double>();
    }
    validate_bands(bands);
    return bands;
}

RiskMatrix matrix_from_json(const Json& value) {
    if (!value.is_array() || value.size() != 5) {
        schema_error("'matrix' must be five rows (likelihood 1..5)");
    }
    std::array<std::array<RiskZone, 5>, 5> cells{};
    for (std::size_t l = 0; l < 5; ++l) {
        if (!value[l].is_array() || value[l].size() != 5) {
            schema_error("matrix rows must hold five severity cells");
        }
        for (std::size_t s = 0; s < 5; ++s) {
            if (!value[l][s].is_string()) {
                schema_error("matrix cells must be zone names");
            }
            auto zone = risk_zone_from_name(value[l][s].get<std::string>());
            if (!zone) {
                throw Error(ErrorCode::InvalidMatrix,
                            "unknown zone " + value[l][s].dump() + " in matrix");
            }
            cells[l][s] = *zone;
        }
    }
    return RiskMatrix::from_cells(cells);
}

TargetTable targets_from_json(const Json& value) {
    if (!value.is_object()) {
        schema_error("'target_table' must map zones to five levels each");
    }
    TargetTable table = default_target_table();
    for (const auto& [key, levels] : value.items()) {
        auto zone = risk_zone_from_name(key);
        if (!zone) {
            schema_error("unknown zone '" + key + "' in target_table");
        }
        if (!levels.is_array() || levels.size() != 5) {
            schema_error("target_table rows must hold five levels");
        }
        for (std::size_t s = 0; s < 5; ++s) {
            if (!levels[s].is_number_integer()) {
                schema_error("target levels must be integers");
            }
            int level = levels[s].get<int>();
            if (level < 1 || level > 4) {
                throw Error(ErrorCode::InvalidMatrix,
                            "target levels must lie in 1..4");
            }
            table.levels[static_cast<std::size_t>(zone_badness(*zone))][s] = level;
        }
    }
    return table;
}

} // namespace

RiskConfig load_risk_config(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        schema_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_error("risk configuration must be a JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (key != "version" && key != "likelihood_bands" && key != "matrix" &&
            key != "target_table") {
            schema_error("unknown risk configuration field '" + key + "'");
        }
    }
    std::string version = detail::require_string(doc, "version", "risk configuration");
    if (version != kRiskConfigSchemaVersion) {
        schema_error("unsupported risk configuration version '" + version + "' (expected " +
                     kRiskConfigSchemaVersion + ")");
    }
    RiskConfig config;
    if (doc.contains("likelihood_bands")) {
        config.bands = bands_from_json(doc["likelihood_bands"]);
    }
    if (doc.contains("matrix")) {
        config.matrix = matrix_from_json(doc["matrix"]);
    }
    if (doc.contains("target_table")) {
        config.targets = targets_from_json(doc["target_table"]);
    }
    return config;
}

HazardSpec load_hazard_spec(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        schema_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_error("hazard spec must be a JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (key != "hazard" && key != "probability" && key != "likelihood" &&
            key != "severity" && key != "note" && key != "measures") {
            schema_error("unknown hazard spec field '" + key + "'");
        }
    }
    HazardSpec spec;
    spec.hazard = detail::require_string(doc, "hazard", "hazard spec");
    if (spec.hazard.empty()) {
        schema_error("hazard text must not be empty");
    }
    if (doc.contains("probability") == doc.contains("likelihood")) {
        schema_error("hazard spec requires exactly one of 'probability' or 'likelihood'");
    }
    if (doc.contains("probability")) {
        if (!doc["probability"].is_number()) {
            schema_error("'probability' must be a number");
        }
        spec.probability = doc["probability"].get<double>();
    } else {
        auto level = likelihood_from_name(detail::require_string(doc, "likelihood",
                                                                 "hazard spec"));
        if (!level) {
            schema_error("unknown likelihood level in hazard spec");
        }
        spec.likelihood = *level;
    }
    auto severity = severity_from_name(detail::require_string(doc, "severity", "hazard spec"));
    if (!severity) {
        schema_error("unknown severity level in hazard spec");
    }
    spec.severity = *severity;
    if (doc.contains("note")) {
        if (!doc["note"].is_string()) {
            schema_error("'note' must be a string");
        }
        spec.note = doc["note"].get<std::string>();
    }
    if (doc.contains("measures")) {
        if (!doc["measures"].is_array()) {
            schema_error("'measures' must be an array");
        }
        for (const auto& entry : doc["measures"]) {
            spec.measures.push_back(detail::measure_from_json(entry, "hazard spec"));
        }
    }
    for (const auto& measure : spec.measures) {
        validate_measure(measure);
    }
    return spec;
}

RiskRecord initial_record(const HazardSpec& spec, const RiskConfig& config) {
    LikelihoodLevel level;
    if (spec.likelihood) {
        level = *spec.likelihood;
    } else {
        if (!config.bands) {
            throw Error(ErrorCode::BandsUnconfigured,
                        "mapping a probability requires configured likelihood bands");
        }
        level = map_probability(*spec.probability, *config.bands);
    }
    return make_risk_record(level, spec.severity, config.matrix, spec.note);
}

} // namespace caseforge
