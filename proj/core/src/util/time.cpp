#include "dcatforge/util/time.hpp"

#include <array>
#include <cstdio>

namespace dcatforge::util {

namespace {

// Howard Hinnant's civil-from-days / days-from-civil, to stay independent of
// the platform's timezone database.
constexpr std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

constexpr void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<int>(yoe) + static_cast<int>(era) * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

bool read_digits(std::string_view s, std::size_t pos, std::size_t count, int& out) {
    if (pos + count > s.size()) return false;
    int value = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + (c - '0');
    }
    out = value;
    return true;
}

constexpr unsigned days_in_month(int y, int m) {
    constexpr std::array<unsigned, 12> lengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2) {
        const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        return leap ? 29 : 28;
    }
    return lengths[static_cast<std::size_t>(m - 1)];
}

struct ParsedDateTime {
    int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
    int offset_minutes = 0;
    bool has_time = false;
};

// Shared parser for the date[Ttime[frac][offset]] family.
std::optional<ParsedDateTime> parse_datetime(std::string_view s, bool allow_date_only) {
    ParsedDateTime p;
    if (!read_digits(s, 0, 4, p.year) || s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    if (!read_digits(s, 5, 2, p.month) || !read_digits(s, 8, 2, p.day)) return std::nullopt;
    if (p.month < 1 || p.month > 12 || p.day < 1 ||
        p.day > static_cast<int>(days_in_month(p.year, p.month)))
        return std::nullopt;

    std::size_t pos = 10;
    if (pos == s.size()) {
        return allow_date_only ? std::optional<ParsedDateTime>(p) : std::nullopt;
    }
    if (s[pos] != 'T') return std::nullopt;
    ++pos;
    p.has_time = true;
    if (!read_digits(s, pos, 2, p.hour) || pos + 8 > s.size() || s[pos + 2] != ':' || s[pos + 5] != ':')
        return std::nullopt;
    if (!read_digits(s, pos + 3, 2, p.minute) || !read_digits(s, pos + 6, 2, p.second))
        return std::nullopt;
    if (p.hour > 23 || p.minute > 59 || p.second > 60) return std::nullopt;
    if (p.second == 60) p.second = 59; // flatten leap seconds
    pos += 8;

    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) return std::nullopt;
    }

    if (pos == s.size()) return p; // naive timestamp, treated as UTC
    if (s[pos] == 'Z') {
        return pos + 1 == s.size() ? std::optional<ParsedDateTime>(p) : std::nullopt;
    }
    if (s[pos] == '+' || s[pos] == '-') {
        const int sign = s[pos] == '-' ? -1 : 1;
        int oh = 0, om = 0;
        if (pos + 6 != s.size() || s[pos + 3] != ':') return std::nullopt;
        if (!read_digits(s, pos + 1, 2, oh) || !read_digits(s, pos + 4, 2, om)) return std::nullopt;
        if (oh > 14 || om > 59) return std::nullopt;
        p.offset_minutes = sign * (oh * 60 + om);
        return p;
    }
    return std::nullopt;
}

Instant to_instant(const ParsedDateTime& p) {
    const std::int64_t days = days_from_civil(p.year, static_cast<unsigned>(p.month),
                                              static_cast<unsigned>(p.day));
    std::int64_t secs = days * 86400 + p.hour * 3600 + p.minute * 60 + p.second;
    secs -= static_cast<std::int64_t>(p.offset_minutes) * 60;
    return Instant{std::chrono::seconds{secs}};
}

} // namespace

std::string format_rfc3339(Instant t) {
    const std::int64_t total = t.time_since_epoch().count();
    std::int64_t days = total / 86400;
    std::int64_t rem = total % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y = 0;
    unsigned m = 0, d = 0;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y, m, d,
                  static_cast<long long>(rem / 3600), static_cast<long long>(rem % 3600 / 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

std::optional<Instant> parse_rfc3339(std::string_view s) {
    const auto parsed = parse_datetime(s, /*allow_date_only=*/false);
    if (!parsed) return std::nullopt;
    return to_instant(*parsed);
}

std::optional<Instant> parse_oai_datestamp(std::string_view s, bool end_of_day) {
    auto parsed = parse_datetime(s, /*allow_date_only=*/true);
    if (!parsed) return std::nullopt;
    if (!parsed->has_time && end_of_day) {
        parsed->hour = 23;
        parsed->minute = 59;
        parsed->second = 59;
    }
    return to_instant(*parsed);
}

bool is_day_granularity(std::string_view s) {
    const auto parsed = parse_datetime(s, /*allow_date_only=*/true);
    return parsed.has_value() && !parsed->has_time;
}

bool is_xsd_datetime(std::string_view lexical) {
    const auto parsed = parse_datetime(lexical, /*allow_date_only=*/false);
    return parsed.has_value();
}

} // namespace dcatforge::util
