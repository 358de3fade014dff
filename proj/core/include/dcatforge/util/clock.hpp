#pragma once

#include "dcatforge/util/time.hpp"

#include <optional>

namespace dcatforge::util {

/// Injectable clock. A fixed clock (e.g. taken from the DCATFORGE_NOW
/// environment variable) makes pipeline runs and reports byte-reproducible.
class Clock {
public:
    static Clock system() { return Clock{std::nullopt}; }
    static Clock fixed(Instant at) { return Clock{at}; }

    /// Reads `var` (RFC 3339) and returns a fixed clock when set, otherwise
    /// the system clock. Throws on an unparseable value.
    static Clock from_env(const char* var = "DCATFORGE_NOW");

    Instant now() const;
    bool is_fixed() const { return fixed_.has_value(); }

private:
    explicit Clock(std::optional<Instant> fixed) : fixed_(fixed) {}
    std::optional<Instant> fixed_;
};

} // namespace dcatforge::util
