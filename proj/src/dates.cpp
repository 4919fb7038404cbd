#include "caseforge/dates.hpp"

#include <cstdio>
#include <ctime>

namespace caseforge {

std::optional<Date> parse_date(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i == 4 || i == 7) continue;
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
    }
    int y = std::stoi(text.substr(0, 4));
    int m = std::stoi(text.substr(5, 2));
    int d = std::stoi(text.substr(8, 2));
    Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
              std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) {
        return std::nullopt;
    }
    return date;
}

std::string format_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

Date add_days(const Date& date, int days) {
    auto sd = std::chrono::sys_days{date} + std::chrono::days{days};
    return Date{sd};
}

bool date_before(const Date& lhs, const Date& rhs) {
    return std::chrono::sys_days{lhs} < std::chrono::sys_days{rhs};
}

bool is_valid_timestamp(const std::string& text) {
    // YYYY-MM-DDThh:mm:ssZ
    if (text.size() != 20 || text[10] != 'T' || text[13] != ':' || text[16] != ':' ||
        text.back() != 'Z') {
        return false;
    }
    if (!parse_date(text.substr(0, 10))) {
        return false;
    }
    auto digits = [&](std::size_t pos) {
        return text[pos] >= '0' && text[pos] <= '9' && text[pos + 1] >= '0' &&
               text[pos + 1] <= '9';
    };
    if (!digits(11) || !digits(14) || !digits(17)) {
        return false;
    }
    int hh = std::stoi(text.substr(11, 2));
    int mm = std::stoi(text.substr(14, 2));
    int ss = std::stoi(text.substr(17, 2));
    return hh < 24 && mm < 60 && ss < 60;
}

std::string now_timestamp_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

Date today_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    return Date{std::chrono::year{tm.tm_year + 1900},
                std::chrono::month{static_cast<unsigned>(tm.tm_mon + 1)},
                std::chrono::day{static_cast<unsigned>(tm.tm_mday)}};
}

} // namespace caseforge
