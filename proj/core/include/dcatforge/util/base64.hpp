#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace dcatforge::util {

std::string base64_encode(std::string_view data);

/// Strict decoder; rejects bad characters and bad padding.
std::optional<std::string> base64_decode(std::string_view data);

} // namespace dcatforge::util
