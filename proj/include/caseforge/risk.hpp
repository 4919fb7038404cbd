#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "caseforge/argument.hpp"
#include "caseforge/errors.hpp"

namespace caseforge {

enum class LikelihoodLevel : int {
    Rare = 1,
    Unlikely = 2,
    Possible = 3,
    Likely = 4,
    AlmostCertain = 5,
};

enum class SeverityLevel : int {
    Negligible = 1,
    Minor = 2,
    Major = 3,
    Severe = 4,
    Catastrophic = 5,
};

enum class RiskZone {
    Unacceptable,
    TolerableALARP,
    BroadlyAcceptable,
};

std::string_view likelihood_name(LikelihoodLevel level);
std::string_view severity_name_of(SeverityLevel level);
std::string_view risk_zone_name(RiskZone zone);

std::optional<LikelihoodLevel> likelihood_from_name(const std::string& name);
std::optional<SeverityLevel> severity_from_name(const std::string& name);
std::optional<RiskZone> risk_zone_from_name(const std::string& name);

/// Unacceptable = 2, TolerableALARP = 1, BroadlyAcceptable = 0.
int zone_badness(RiskZone zone);

/// Annual-probability bands per likelihood level: level i covers
/// (upper[i-2], upper[i-1]], with (0, upper[0]] for Rare. upper must be
/// strictly increasing and end at 1.
struct LikelihoodBands {
    std::array<double, 5> upper;

    bool operator==(const LikelihoodBands&) const = default;
};

LikelihoodBands default_likelihood_bands();

/// Band lookup for p in (0, 1]; upper bounds are inclusive.
/// Throws OutOfRange.
LikelihoodLevel map_probability(double p, const LikelihoodBands& bands);

/// Total, monotone 5x5 likelihood x severity grid.
class RiskMatrix {
public:
    /// Validates totality and monotonicity; throws InvalidMatrix.
    static RiskMatrix from_cells(const std::array<std::array<RiskZone, 5>, 5>& cells);

    /// Broadly acceptable iff likelihood+severity <= 4 and severity below
    /// Catastrophic; unacceptable iff likelihood+severity >= 8; tolerable
    /// (ALARP) otherwise. No Catastrophic cell is broadly acceptable.
    static RiskMatrix defaults();

    RiskZone at(LikelihoodLevel likelihood, SeverityLevel severity) const;

    bool operator==(const RiskMatrix&) const = default;

private:
    RiskMatrix() = default;
    std::array<std::array<RiskZone, 5>, 5> cells_{}; // [likelihood-1][severity-1]
};

/// Pure matrix lookup.
RiskZone classify(LikelihoodLevel likelihood, SeverityLevel severity, const RiskMatrix& matrix);

struct RiskRecord {
    LikelihoodLevel likelihood = LikelihoodLevel::Rare;
    SeverityLevel severity = SeverityLevel::Negligible;
    RiskZone zone = RiskZone::BroadlyAcceptable; // matrix lookup of (likelihood, severity)
    std::string note;

    bool operator==(const RiskRecord&) const = default;
};

RiskRecord make_risk_record(LikelihoodLevel likelihood, SeverityLevel severity,
                            const RiskMatrix& matrix, std::string note = {});

enum class MeasureKind {
    Eliminate,
    ModifyDesignOrOperation,
    ReduceSeverity,
};

std::string_view measure_kind_name(MeasureKind kind);
std::optional<MeasureKind> measure_kind_from_name(const std::string& name);

/// A risk reduction measure. Likelihood reduction is either factor-style
/// (divides a numeric probability, which is then re-banded) or step-style
/// (ordinal decrement); severity reduction is always step-style.
struct RiskReductionMeasure {
    std::string id;
    MeasureKind kind = MeasureKind::ModifyDesignOrOperation;
    LifecyclePhase phase = LifecyclePhase::Development;
    std::optional<double> likelihood_factor; // >= 1
    int likelihood_steps = 0;                // >= 0
    int severity_steps = 0;                  // >= 0
    std::string description;
    std::optional<EvidenceRef> evidence;

    bool operator==(const RiskReductionMeasure&) const = default;
};

/// Throws InvalidMeasure when kind-specific minimums are not met:
/// ReduceSeverity needs severity_steps >= 1; ModifyDesignOrOperation needs
/// likelihood_steps >= 1 or likelihood_factor > 1.
void validate_measure(const RiskReductionMeasure& measure);

/// Per-level integrity targets, indexed by [zone][severity-1].
struct TargetTable {
    std::array<std::array<int, 5>, 3> levels{};

    bool operator==(const TargetTable&) const = default;
};

TargetTable default_target_table();

struct IntegrityTarget {
    int level = 1; // 1..4
    std::string note;
};

IntegrityTarget map_target_level(RiskZone zone_before, SeverityLevel severity,
                                 const TargetTable& table = default_target_table());

/// Matrix + bands + target table, loadable from one JSON configuration file.
struct RiskConfig {
    RiskMatrix matrix = RiskMatrix::defaults();
    std::optional<LikelihoodBands> bands = default_likelihood_bands();
    TargetTable targets = default_target_table();
};

inline constexpr const char* kRiskConfigSchemaVersion = "caseforge-risk/1";

/// Throws InvalidMatrix / SchemaError. Omitted sections fall back to the
/// defaults.
RiskConfig load_risk_config(const std::string& json_text);

struct MeasureTraceEntry {
    std::string measure_id;
    RiskRecord before;
    RiskRecord after;
    std::optional<double> probability_before;
    std::optional<double> probability_after;
};

struct ResidualResult {
    bool eliminated = false;
    RiskRecord residual;
    std::optional<double> probability;
    std::vector<MeasureTraceEntry> trace;
};

/// Applies measures in order. Eliminate short-circuits; factor measures
/// divide the numeric probability and re-band it; step measures decrement
/// ordinals with a floor at level 1. The zone is recomputed after every
/// measure. Throws MissingProbability / InvalidMeasure / BandsUnconfigured.
ResidualResult apply_measures(const RiskRecord& initial, std::optional<double> probability,
                              const std::vector<RiskReductionMeasure>& measures,
                              const RiskConfig& config);

enum class WorkflowOutcome {
    Eliminated,
    Tolerable,
    ResidualRequiresAcceptance,
};

std::string_view workflow_outcome_name(WorkflowOutcome outcome);

enum class WorkflowStepKind {
    IdentifyHazard,
    EstimateRisk,
    EvaluateRisk,
    ApplyMeasure,
    Terminate,
};

std::string_view workflow_step_kind_name(WorkflowStepKind kind);

struct WorkflowStep {
    WorkflowStepKind kind = WorkflowStepKind::IdentifyHazard;
    std::string text;                       // hazard description / measure id
    std::optional<RiskRecord> record;       // EstimateRisk
    std::optional<double> probability;      // EstimateRisk, when tracked
    std::optional<RiskZone> zone;           // EvaluateRisk
    std::optional<WorkflowOutcome> outcome; // Terminate
};

struct WorkflowTrace {
    std::vector<WorkflowStep> steps;
    WorkflowOutcome outcome = WorkflowOutcome::Tolerable;
    ResidualResult residual;
};

/// ISO/IEC-Guide-51-style risk reduction loop: identify the hazard, then
/// estimate and evaluate; stop as tolerable once broadly acceptable, apply
/// the next measure while any remain, otherwise terminate with residual risk
/// requiring acceptance. An Eliminate measure terminates as Eliminated.
WorkflowTrace run_workflow(const std::string& hazard, const RiskRecord& initial,
                           std::optional<double> probability,
                           const std::vector<RiskReductionMeasure>& measures,
                           const RiskConfig& config);

/// Input file for the risk commands: hazard text, initial risk as either a
/// probability or an explicit likelihood level, a severity, and an ordered
/// measure list.
struct HazardSpec {
    std::string hazard;
    std::optional<double> probability;
    std::optional<LikelihoodLevel> likelihood;
    SeverityLevel severity = SeverityLevel::Negligible;
    std::string note;
    std::vector<RiskReductionMeasure> measures;
};

/// Throws SchemaError.
HazardSpec load_hazard_spec(const std::string& json_text);

/// Initial record for a spec under a config (maps the probability through
/// the bands when no explicit likelihood is given).
RiskRecord initial_record(const HazardSpec& spec, const RiskConfig& config);

} // namespace caseforge
