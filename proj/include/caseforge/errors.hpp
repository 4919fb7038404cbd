#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace caseforge {

/// Machine-checkable reason attached to every caseforge::Error.
enum class ErrorCode {
    // graph construction
    DuplicateId,
    DanglingEdge,
    SelfLoop,
    // graph queries
    UnknownNode,
    NotAGoal,
    // validator
    PreconditionFailed,
    CannotRemoveRoot,
    // risk engine
    InvalidMatrix,
    BandsUnconfigured,
    OutOfRange,
    MissingProbability,
    InvalidMeasure,
    // hazard log
    DuplicateHazardId,
    UnknownGoal,
    UnknownEntry,
    IllegalTransition,
    WrongOwner,
    NothingToAccept,
    ConflictingRevision,
    // io / formats
    IoError,
    SchemaError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace caseforge
