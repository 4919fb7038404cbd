#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "caseforge/argument.hpp"
#include "caseforge/risk.hpp"

namespace caseforge {

inline constexpr const char* kHazardLogSchemaVersion = "caseforge-hazlog/1";

enum class HazardStatus {
    Open,
    UnderMitigation,
    ResidualAccepted,
    Closed,
};

std::string_view hazard_status_name(HazardStatus status);
std::optional<HazardStatus> hazard_status_from_name(const std::string& name);

struct AcceptanceRecord {
    std::string owner;     // must equal the case risk owner
    std::string rationale; // ALARP / grossly-disproportionate reasoning, free text
    std::string timestamp; // ISO-8601 UTC

    bool operator==(const AcceptanceRecord&) const = default;
};

/// Through-life tracking record for one hazard.
struct HazardLogEntry {
    std::string id;
    std::string hazard;
    std::optional<std::string> hazardous_event_goal;
    HazardStatus status = HazardStatus::Open;
    std::vector<RiskRecord> risk_history; // append-only
    std::vector<std::string> measure_ids;
    bool eliminated = false; // an Eliminate measure was recorded
    std::optional<AcceptanceRecord> acceptance;
    std::string created;
    std::string updated;

    bool operator==(const HazardLogEntry&) const = default;
};

struct JournalEvent {
    std::uint64_t revision = 0;
    std::string timestamp;
    std::string op; // open | measure | accept | close
    nlohmann::json payload;
};

/// File-backed hazard log: entries plus an append-only journal of every
/// mutation. Replaying the journal from empty reproduces the entry set.
/// Single writer per store file; a stale write (the file changed since this
/// store was loaded) is rejected via the revision number.
class LogStore {
public:
    LogStore() = default;

    static LogStore from_json(const std::string& json_text); // SchemaError
    static LogStore load_file(const std::string& path);      // IoError / SchemaError

    std::string to_json_canonical() const;

    /// Atomic replace: writes a temp file in the same directory and renames
    /// it over the target. Throws ConflictingRevision when the on-disk
    /// revision no longer matches the one this store was loaded from.
    void save_file(const std::string& path) const;

    const std::vector<HazardLogEntry>& entries() const { return entries_; }
    const std::vector<JournalEvent>& journal() const { return journal_; }
    std::uint64_t revision() const { return revision_; }

    const HazardLogEntry* find(const std::string& entry_id) const;

    /// Next free auto-generated id (HZ-001, HZ-002, ...).
    std::string next_id() const;

    /// Opens a new entry. The goal link, when given, must resolve to a node
    /// in the linked case. Throws DuplicateHazardId / UnknownGoal / SchemaError.
    const HazardLogEntry& open_entry(const std::string& hazard,
                                     const std::optional<std::string>& goal,
                                     const std::string& timestamp,
                                     const ArgumentGraph* linked_case = nullptr,
                                     const std::string& id = {});

    /// Appends a measure and the resulting risk record; status becomes
    /// UnderMitigation. Throws UnknownEntry / IllegalTransition.
    const HazardLogEntry& record_measure(const std::string& entry_id,
                                         const RiskReductionMeasure& measure,
                                         const RiskRecord& resulting,
                                         const std::string& timestamp);

    /// Residual-risk acceptance by the case risk owner. Throws UnknownEntry /
    /// IllegalTransition / WrongOwner / NothingToAccept.
    const HazardLogEntry& accept_residual(const std::string& entry_id, const std::string& owner,
                                          const std::string& rationale,
                                          const std::string& case_risk_owner,
                                          const std::string& timestamp);

    /// Closes an entry whose latest zone is broadly acceptable, whose
    /// residual risk was accepted, or whose hazard was eliminated.
    /// Throws UnknownEntry / IllegalTransition naming the failed guard.
    const HazardLogEntry& close_entry(const std::string& entry_id, const std::string& timestamp);

private:
    HazardLogEntry* find_mutable(const std::string& entry_id);
    void append_event(const std::string& op, nlohmann::json payload,
                      const std::string& timestamp);

    std::vector<HazardLogEntry> entries_;
    std::vector<JournalEvent> journal_;
    std::uint64_t revision_ = 0;
    std::uint64_t loaded_revision_ = 0; // disk revision this store was read at
};

/// Rebuilds the entry set by replaying journal events from an empty store.
std::vector<HazardLogEntry> replay_journal(const std::vector<JournalEvent>& journal);

struct LogReport {
    std::map<HazardStatus, int> status_counts;
    std::vector<std::string> open_unacceptable; // non-terminal entries at Unacceptable
    std::vector<std::string> unlinked_entries;  // entries without a goal link
    std::vector<std::string> unlogged_goals;    // hazardous-event goals without an entry
    bool cross_checked = false;                 // true when a case was supplied
};

LogReport report(const LogStore& store, const ArgumentGraph* linked_case = nullptr);

} // namespace caseforge
