#pragma once

#include <stdexcept>
#include <string>

namespace dcatforge {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

} // namespace dcatforge
