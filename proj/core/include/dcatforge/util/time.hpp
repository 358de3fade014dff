#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dcatforge::util {

/// UTC instant with second resolution; the common currency for datestamps,
/// evaluation timestamps and OAI-PMH date arguments.
using Instant = std::chrono::sys_seconds;

/// Formats an instant as RFC 3339 / xsd:dateTime in UTC, e.g.
/// "2023-11-01T12:00:00Z".
std::string format_rfc3339(Instant t);

/// Parses an RFC 3339 / xsd:dateTime string. Fractional seconds are accepted
/// and truncated; a missing offset is treated as UTC. Returns nullopt on any
/// shape violation.
std::optional<Instant> parse_rfc3339(std::string_view s);

/// Parses an OAI-PMH datestamp, which may carry either day granularity
/// ("2023-11-01") or second granularity ("2023-11-01T12:00:00Z"). A bare date
/// maps to midnight; with `end_of_day` it maps to 23:59:59 so that `until`
/// filters are inclusive.
std::optional<Instant> parse_oai_datestamp(std::string_view s, bool end_of_day);

/// True if the string has day granularity (YYYY-MM-DD, no time part).
bool is_day_granularity(std::string_view s);

/// Checks the lexical shape of an xsd:dateTime value (offset optional,
/// fractional seconds allowed). Shape only; no range validation beyond
/// month/day plausibility.
bool is_xsd_datetime(std::string_view lexical);

} // namespace dcatforge::util
