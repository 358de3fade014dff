#pragma once

#include "dcatforge/error.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace dcatforge::ingest {

/// '/'-separated object keys; a segment of digits indexes a list. No
/// wildcards. The leading '/' is optional.
std::vector<std::string> split_path(std::string_view path);

/// Value at `path`, or nullptr when any segment is missing or mismatched.
const nlohmann::json* path_get(const nlohmann::json& root, std::string_view path);

/// Writes `value` at `path`, creating intermediate objects. Array creation is
/// not supported for targets; numeric segments become plain object keys.
void path_set(nlohmann::json& root, std::string_view path, nlohmann::json value);

/// True if `path` equals `prefix` or descends from it.
bool path_under(std::string_view path, std::string_view prefix);

} // namespace dcatforge::ingest
