#pragma once

#include <chrono>
#include <optional>
#include <string>

namespace caseforge {

using Date = std::chrono::year_month_day;

/// Parses "YYYY-MM-DD". Returns nullopt for anything else, including
/// calendar-invalid dates such as 2024-02-30.
std::optional<Date> parse_date(const std::string& text);

/// Renders a date back to "YYYY-MM-DD".
std::string format_date(const Date& date);

/// Calendar arithmetic used by the evidence staleness lint.
Date add_days(const Date& date, int days);

bool date_before(const Date& lhs, const Date& rhs);

/// Validates an ISO-8601 UTC timestamp of the form "YYYY-MM-DDThh:mm:ssZ".
bool is_valid_timestamp(const std::string& text);

/// Current wall-clock time as "YYYY-MM-DDThh:mm:ssZ".
std::string now_timestamp_utc();

/// Current wall-clock date (UTC).
Date today_utc();

} // namespace caseforge
