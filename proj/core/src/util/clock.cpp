#include "dcatforge/util/clock.hpp"

#include "dcatforge/error.hpp"

#include <chrono>
#include <cstdlib>
#include <string>

namespace dcatforge::util {

Clock Clock::from_env(const char* var) {
    const char* value = std::getenv(var);
    if (value == nullptr || *value == '\0') return system();
    const auto parsed = parse_rfc3339(value);
    if (!parsed) {
        throw Error(std::string(var) + " is not an RFC 3339 timestamp: " + value);
    }
    return fixed(*parsed);
}

Instant Clock::now() const {
    if (fixed_) return *fixed_;
    return std::chrono::time_point_cast<std::chrono::seconds>(
        std::chrono::system_clock::now());
}

} // namespace dcatforge::util
