#include "dcatforge/ingest/json_path.hpp"

#include <cctype>

namespace dcatforge::ingest {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

std::vector<std::string> split_path(std::string_view path) {
    if (!path.empty() && path.front() == '/') path.remove_prefix(1);
    if (path.empty()) throw Error("empty path");
    std::vector<std::string> segments;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= path.size(); ++i) {
        if (i == path.size() || path[i] == '/') {
            if (i == start) throw Error("empty segment in path '" + std::string(path) + "'");
            segments.emplace_back(path.substr(start, i - start));
            start = i + 1;
        }
    }
    return segments;
}

const nlohmann::json* path_get(const nlohmann::json& root, std::string_view path) {
    const nlohmann::json* node = &root;
    for (const auto& segment : split_path(path)) {
        if (node->is_object()) {
            const auto it = node->find(segment);
            if (it == node->end()) return nullptr;
            node = &*it;
        } else if (node->is_array() && all_digits(segment)) {
            const std::size_t index = std::stoull(segment);
            if (index >= node->size()) return nullptr;
            node = &(*node)[index];
        } else {
            return nullptr;
        }
    }
    return node;
}

void path_set(nlohmann::json& root, std::string_view path, nlohmann::json value) {
    const auto segments = split_path(path);
    nlohmann::json* node = &root;
    for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
        if (!node->is_object()) {
            throw Error("path '" + std::string(path) + "' descends into a non-object");
        }
        node = &(*node)[segments[i]];
        if (node->is_null()) *node = nlohmann::json::object();
    }
    if (!node->is_object()) {
        throw Error("path '" + std::string(path) + "' descends into a non-object");
    }
    (*node)[segments.back()] = std::move(value);
}

bool path_under(std::string_view path, std::string_view prefix) {
    const auto p = split_path(path);
    const auto q = split_path(prefix);
    if (q.size() > p.size()) return false;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (p[i] != q[i]) return false;
    }
    return true;
}

} // namespace dcatforge::ingest
