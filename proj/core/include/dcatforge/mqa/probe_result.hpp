#pragma once

#include <map>
#include <optional>
#include <string>

namespace dcatforge::mqa {

/// Outcome of one HTTP HEAD probe; nullopt status means no response
/// (timeout, refused connection, DNS failure).
struct ProbeOutcome {
    std::optional<int> status;

    friend bool operator==(const ProbeOutcome&, const ProbeOutcome&) = default;
};

/// URL -> probe outcome. Scoring consumes this map and never performs I/O.
using ProbeResultMap = std::map<std::string, ProbeOutcome>;

/// Accessible iff the final status is in the 200 or 300 range (200..399).
inline bool probe_accessible(const ProbeOutcome& outcome) {
    return outcome.status.has_value() && *outcome.status >= 200 && *outcome.status <= 399;
}

} // namespace dcatforge::mqa
