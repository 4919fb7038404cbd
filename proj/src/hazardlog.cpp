#include "caseforge/hazardlog.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "caseforge/dates.hpp"
#include "json_common.hpp"

namespace caseforge {

using detail::Json;
using detail::schema_error;

std::string_view hazard_status_name(HazardStatus status) {
    switch (status) {
    case HazardStatus::Open: return "Open";
    case HazardStatus::UnderMitigation: return "UnderMitigation";
    case HazardStatus::ResidualAccepted: return "ResidualAccepted";
    case HazardStatus::Closed: return "Closed";
    }
    return "Open";
}

std::optional<HazardStatus> hazard_status_from_name(const std::string& name) {
    for (HazardStatus status : {HazardStatus::Open, HazardStatus::UnderMitigation,
                                HazardStatus::ResidualAccepted, HazardStatus::Closed}) {
        if (name == hazard_status_name(status)) return status;
    }
    return std::nullopt;
}

namespace {

void require_timestamp(const std::string& timestamp) {
    if (!is_valid_timestamp(timestamp)) {
        schema_error("timestamp '" + timestamp + "' is not ISO-8601 UTC (YYYY-MM-DDThh:mm:ssZ)");
    }
}

Json entry_to_json(const HazardLogEntry& entry) {
    Json out;
    out["id"] = entry.id;
    out["hazard"] = entry.hazard;
    if (entry.hazardous_event_goal) {
        out["goal"] = *entry.hazardous_event_goal;
    }
    out["status"] = std::string(hazard_status_name(entry.status));
    Json history = Json::array();
    for (const auto& record : entry.risk_history) {
        history.push_back(detail::risk_record_to_json(record));
    }
    out["risk_history"] = std::move(history);
    out["measures"] = entry.measure_ids;
    if (entry.eliminated) {
        out["eliminated"] = true;
    }
    if (entry.acceptance) {
        Json acceptance;
        acceptance["owner"] = entry.acceptance->owner;
        acceptance["rationale"] = entry.acceptance->rationale;
        acceptance["timestamp"] = entry.acceptance->timestamp;
        out["acceptance"] = std::move(acceptance);
    }
    out["created"] = entry.created;
    out["updated"] = entry.updated;
    return out;
}

HazardLogEntry entry_from_json(const Json& value) {
    if (!value.is_object()) {
        schema_error("hazard log entries must be objects");
    }
    for (const auto& [key, _] : value.items()) {
        if (key != "id" && key != "hazard" && key != "goal" && key != "status" &&
            key != "risk_history" && key != "measures" && key != "eliminated" &&
            key != "acceptance" && key != "created" && key != "updated") {
            schema_error("unknown hazard log entry field '" + key + "'");
        }
    }
    HazardLogEntry entry;
    entry.id = detail::require_string(value, "id", "hazard log entry");
    entry.hazard = detail::require_string(value, "hazard", "hazard log entry");
    if (value.contains("goal")) {
        entry.hazardous_event_goal = detail::require_string(value, "goal", "hazard log entry");
    }
    auto status = hazard_status_from_name(
        detail::require_string(value, "status", "hazard log entry"));
    if (!status) {
        schema_error("unknown status on entry '" + entry.id + "'");
    }
    entry.status = *status;
    if (value.contains("risk_history")) {
        if (!value["risk_history"].is_array()) {
            schema_error("'risk_history' must be an array");
        }
        for (const auto& record : value["risk_history"]) {
            entry.risk_history.push_back(
                detail::risk_record_from_json(record, "hazard log entry"));
        }
    }
    if (value.contains("measures")) {
        if (!value["measures"].is_array()) {
            schema_error("'measures' must be an array");
        }
        for (const auto& id : value["measures"]) {
            if (!id.is_string()) {
                schema_error("'measures' entries must be measure ids");
            }
            entry.measure_ids.push_back(id.get<std::string>());
        }
    }
    if (value.contains("eliminated")) {
        if (!value["eliminated"].is_boolean()) {
            schema_error("'eliminated' must be a boolean");
        }
        entry.eliminated = value["eliminated"].get<bool>();
    }
    if (value.contains("acceptance")) {
        const Json& acceptance = value["acceptance"];
        AcceptanceRecord record;
        record.owner = detail::require_string(acceptance, "owner", "acceptance");
        record.rationale = detail::require_string(acceptance, "rationale", "acceptance");
        record.timestamp = detail::require_string(acceptance, "timestamp", "acceptance");
        entry.acceptance = std::move(record);
    }
    entry.created = detail::require_string(value, "created", "hazard log entry");
    entry.updated = detail::require_string(value, "updated", "hazard log entry");
    return entry;
}

} // namespace

LogStore LogStore::from_json(const std::string& json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        schema_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_error("hazard log store must be a JSON object");
    }
    std::string version = detail::require_string(doc, "version", "hazard log store");
    if (version != kHazardLogSchemaVersion) {
        schema_error("unsupported hazard log version '" + version + "' (expected " +
                     kHazardLogSchemaVersion + ")");
    }
    LogStore store;
    if (doc.contains("revision")) {
        if (!doc["revision"].is_number_unsigned()) {
            schema_error("'revision' must be a non-negative integer");
        }
        store.revision_ = doc["revision"].get<std::uint64_t>();
    }
    if (doc.contains("entries")) {
        if (!doc["entries"].is_array()) {
            schema_error("'entries' must be an array");
        }
        for (const auto& entry : doc["entries"]) {
            store.entries_.push_back(entry_from_json(entry));
        }
    }
    if (doc.contains("journal")) {
        if (!doc["journal"].is_array()) {
            schema_error("'journal' must be an array");
        }
        for (const auto& event : doc["journal"]) {
            if (!event.is_object()) {
                schema_error("journal events must be objects");
            }
            JournalEvent parsed;
            if (!event.contains("revision") || !event["revision"].is_number_unsigned()) {
                schema_error("journal events require an unsigned 'revision'");
            }
            parsed.revision = event["revision"].get<std::uint64_t>();
            parsed.timestamp = detail::require_string(event, "timestamp", "journal event");
            parsed.op = detail::require_string(event, "op", "journal event");
            if (!event.contains("payload") || !event["payload"].is_object()) {
                schema_error("journal events require an object 'payload'");
            }
            parsed.payload = event["payload"];
            store.journal_.push_back(std::move(parsed));
        }
    }
    store.loaded_revision_ = store.revision_;
    return store;
}

LogStore LogStore::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read hazard log store '" + path + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json(text);
}

std::string LogStore::to_json_canonical() const {
    Json out;
    out["version"] = kHazardLogSchemaVersion;
    out["revision"] = revision_;
    Json entries = Json::array();
    for (const auto& entry : entries_) {
        entries.push_back(entry_to_json(entry));
    }
    out["entries"] = std::move(entries);
    Json journal = Json::array();
    for (const auto& event : journal_) {
        Json record;
        record["revision"] = event.revision;
        record["timestamp"] = event.timestamp;
        record["op"] = event.op;
        record["payload"] = event.payload;
        journal.push_back(std::move(record));
    }
    out["journal"] = std::move(journal);
    return out.dump();
}

void LogStore::save_file(const std::string& path) const {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::exists(path, ec)) {
        // stale-write detection: the on-disk revision must match what this
        // store was loaded at
        LogStore on_disk = load_file(path);
        if (on_disk.revision_ != loaded_revision_) {
            throw Error(ErrorCode::ConflictingRevision,
                        "store '" + path + "' is at revision " +
                            std::to_string(on_disk.revision_) + ", expected " +
                            std::to_string(loaded_revision_));
        }
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::IoError, "cannot write '" + tmp + "'");
        }
        out << to_json_canonical() << '\n';
        if (!out.good()) {
            throw Error(ErrorCode::IoError, "failed writing '" + tmp + "'");
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        throw Error(ErrorCode::IoError, "atomic rename onto '" + path + "' failed: " +
                                            ec.message());
    }
}

const HazardLogEntry* LogStore::find(const std::string& entry_id) const {
    for (const auto& entry : entries_) {
        if (entry.id == entry_id) return &entry;
    }
    return nullptr;
}

HazardLogEntry* LogStore::find_mutable(const std::string& entry_id) {
    for (auto& entry : entries_) {
        if (entry.id == entry_id) return &entry;
    }
    return nullptr;
}

std::string LogStore::next_id() const {
    long max_seen = 0;
    for (const auto& entry : entries_) {
        if (entry.id.rfind("HZ-", 0) == 0) {
            char* end = nullptr;
            long value = std::strtol(entry.id.c_str() + 3, &end, 10);
            if (end && *end == '\0' && value > max_seen) {
                max_seen = value;
            }
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "HZ-%03ld", max_seen + 1);
    return buf;
}

void LogStore::append_event(const std::string& op, Json payload, const std::string& timestamp) {
    ++revision_;
    JournalEvent event;
    event.revision = revision_;
    event.timestamp = timestamp;
    event.op = op;
    event.payload = std::move(payload);
    journal_.push_back(std::move(event));
}

const HazardLogEntry& LogStore::open_entry(const std::string& hazard,
                                           const std::optional<std::string>& goal,
                                           const std::string& timestamp,
                                           const ArgumentGraph* linked_case,
                                           const std::string& id) {
    require_timestamp(timestamp);
    if (hazard.empty()) {
        schema_error("hazard text must not be empty");
    }
    std::string entry_id = id.empty() ? next_id() : id;
    if (find(entry_id)) {
        throw Error(ErrorCode::DuplicateHazardId,
                    "hazard log entry '" + entry_id + "' already exists");
    }
    if (goal && linked_case && !linked_case->contains(*goal)) {
        throw Error(ErrorCode::UnknownGoal,
                    "goal '" + *goal + "' does not resolve in the linked case");
    }
    HazardLogEntry entry;
    entry.id = entry_id;
    entry.hazard = hazard;
    entry.hazardous_event_goal = goal;
    entry.status = HazardStatus::Open;
    entry.created = timestamp;
    entry.updated = timestamp;
    entries_.push_back(std::move(entry));

    Json payload;
    payload["id"] = entry_id;
    payload["hazard"] = hazard;
    if (goal) {
        payload["goal"] = *goal;
    }
    append_event("open", std::move(payload), timestamp);
    return entries_.back();
}

const HazardLogEntry& LogStore::record_measure(const std::string& entry_id,
                                               const RiskReductionMeasure& measure,
                                               const RiskRecord& resulting,
                                               const std::string& timestamp) {
    require_timestamp(timestamp);
    HazardLogEntry* entry = find_mutable(entry_id);
    if (!entry) {
        throw Error(ErrorCode::UnknownEntry, "no hazard log entry '" + entry_id + "'");
    }
    if (entry->status != HazardStatus::Open && entry->status != HazardStatus::UnderMitigation) {
        throw Error(ErrorCode::IllegalTransition,
                    "cannot record a measure on a " +
                        std::string(hazard_status_name(entry->status)) + " entry");
    }
    validate_measure(measure);

    entry->status = HazardStatus::UnderMitigation;
    entry->measure_ids.push_back(measure.id);
    entry->risk_history.push_back(resulting);
    if (measure.kind == MeasureKind::Eliminate) {
        entry->eliminated = true;
    }
    entry->updated = timestamp;

    Json payload;
    payload["entry"] = entry_id;
    payload["measure"] = detail::measure_to_json(measure);
    payload["resulting"] = detail::risk_record_to_json(resulting);
    append_event("measure", std::move(payload), timestamp);
    return *entry;
}

const HazardLogEntry& LogStore::accept_residual(const std::string& entry_id,
                                                const std::string& owner,
                                                const std::string& rationale,
                                                const std::string& case_risk_owner,
                                                const std::string& timestamp) {
    require_timestamp(timestamp);
    HazardLogEntry* entry = find_mutable(entry_id);
    if (!entry) {
        throw Error(ErrorCode::UnknownEntry, "no hazard log entry '" + entry_id + "'");
    }
    if (owner.empty()) {
        schema_error("acceptance owner must not be empty");
    }
    if (rationale.empty()) {
        schema_error("acceptance rationale must not be empty");
    }
    if (entry->status != HazardStatus::UnderMitigation) {
        throw Error(ErrorCode::IllegalTransition,
                    "cannot accept residual risk on a " +
                        std::string(hazard_status_name(entry->status)) + " entry");
    }
    if (owner != case_risk_owner) {
        throw Error(ErrorCode::WrongOwner, "owner '" + owner + "' is not the case risk owner '" +
                                               case_risk_owner + "'");
    }
    if (!entry->risk_history.empty() &&
        entry->risk_history.back().zone == RiskZone::BroadlyAcceptable) {
        throw Error(ErrorCode::NothingToAccept,
                    "latest risk is already broadly acceptable; close the entry instead");
    }
    AcceptanceRecord record;
    record.owner = owner;
    record.rationale = rationale;
    record.timestamp = timestamp;
    entry->acceptance = std::move(record);
    entry->status = HazardStatus::ResidualAccepted;
    entry->updated = timestamp;

    Json payload;
    payload["entry"] = entry_id;
    payload["owner"] = owner;
    payload["rationale"] = rationale;
    append_event("accept", std::move(payload), timestamp);
    return *entry;
}

const HazardLogEntry& LogStore::close_entry(const std::string& entry_id,
                                            const std::string& timestamp) {
    require_timestamp(timestamp);
    HazardLogEntry* entry = find_mutable(entry_id);
    if (!entry) {
        throw Error(ErrorCode::UnknownEntry, "no hazard log entry '" + entry_id + "'");
    }
    if (entry->status == HazardStatus::Closed) {
        throw Error(ErrorCode::IllegalTransition, "entry '" + entry_id + "' is already closed");
    }
    bool zone_acceptable = !entry->risk_history.empty() &&
                           entry->risk_history.back().zone == RiskZone::BroadlyAcceptable;
    bool accepted = entry->status == HazardStatus::ResidualAccepted;
    if (!zone_acceptable && !accepted && !entry->eliminated) {
        throw Error(ErrorCode::IllegalTransition,
                    "cannot close '" + entry_id +
                        "': zone not broadly acceptable, residual risk not accepted, hazard "
                        "not eliminated");
    }
    entry->status = HazardStatus::Closed;
    entry->updated = timestamp;

    Json payload;
    payload["entry"] = entry_id;
    append_event("close", std::move(payload), timestamp);
    return *entry;
}

std::vector<HazardLogEntry> replay_journal(const std::vector<JournalEvent>& journal) {
    LogStore store;
    for (const auto& event : journal) {
        const Json& payload = event.payload;
        if (event.op == "open") {
            std::optional<std::string> goal;
            if (payload.contains("goal")) {
                goal = payload["goal"].get<std::string>();
            }
            store.open_entry(detail::require_string(payload, "hazard", "journal open"), goal,
                             event.timestamp, nullptr,
                             detail::require_string(payload, "id", "journal open"));
        } else if (event.op == "measure") {
            if (!payload.contains("measure") || !payload.contains("resulting")) {
                schema_error("journal measure event lacks measure/resulting");
            }
            store.record_measure(detail::require_string(payload, "entry", "journal measure"),
                                 detail::measure_from_json(payload["measure"], "journal"),
                                 detail::risk_record_from_json(payload["resulting"], "journal"),
                                 event.timestamp);
        } else if (event.op == "accept") {
            std::string owner = detail::require_string(payload, "owner", "journal accept");
            store.accept_residual(detail::require_string(payload, "entry", "journal accept"),
                                  owner,
                                  detail::require_string(payload, "rationale", "journal accept"),
                                  owner, event.timestamp);
        } else if (event.op == "close") {
            store.close_entry(detail::require_string(payload, "entry", "journal close"),
                              event.timestamp);
        } else {
            schema_error("unknown journal op '" + event.op + "'");
        }
    }
    return store.entries();
}

LogReport report(const LogStore& store, const ArgumentGraph* linked_case) {
    LogReport result;
    for (HazardStatus status : {HazardStatus::Open, HazardStatus::UnderMitigation,
                                HazardStatus::ResidualAccepted, HazardStatus::Closed}) {
        result.status_counts[status] = 0;
    }
    std::set<std::string> linked_goals;
    for (const auto& entry : store.entries()) {
        ++result.status_counts[entry.status];
        bool terminal = entry.status == HazardStatus::Closed ||
                        entry.status == HazardStatus::ResidualAccepted;
        if (!terminal && !entry.risk_history.empty() &&
            entry.risk_history.back().zone == RiskZone::Unacceptable) {
            result.open_unacceptable.push_back(entry.id);
        }
        if (entry.hazardous_event_goal) {
            linked_goals.insert(*entry.hazardous_event_goal);
        } else {
            result.unlinked_entries.push_back(entry.id);
        }
    }
    std::sort(result.open_unacceptable.begin(), result.open_unacceptable.end());
    std::sort(result.unlinked_entries.begin(), result.unlinked_entries.end());
    if (linked_case) {
        result.cross_checked = true;
        for (const auto& goal : linked_case->metadata().hazardous_event_goals) {
            if (!linked_goals.count(goal)) {
                result.unlogged_goals.push_back(goal); // set iteration, already sorted
            }
        }
    }
    return result;
}

} // namespace caseforge
