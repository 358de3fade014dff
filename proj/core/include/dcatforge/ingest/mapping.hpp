#pragma once

#include "dcatforge/error.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace dcatforge::ingest {

/// The raw record is not usable (not a JSON object, bad id value, ...).
class InvalidRecord : public Error {
public:
    using Error::Error;
};

/// One or more assignment source paths are absent from the record; lists all
/// of them.
class MissingSourcePath : public Error {
public:
    explicit MissingSourcePath(std::vector<std::string> paths);
    const std::vector<std::string>& paths() const { return paths_; }

private:
    std::vector<std::string> paths_;
};

struct Assignment {
    std::string target; // path inside the entity's attributes; "id" is special
    std::string source; // path inside the raw record
};

/// Declarative allow-list mapping: only assigned values survive; everything
/// else in the record is discarded. Drop paths document fields that must
/// never leak and are cross-checked against assignment sources.
struct MappingSpec {
    std::string entity_type; // e.g. "WeatherObserved"
    std::vector<Assignment> assignments;
    std::vector<std::string> drops;

    /// Enforces the structural invariants: non-empty type, unique targets,
    /// and no assignment source lying under a dropped path.
    void validate() const;
};

/// An NGSI-LD-shaped entity: absolute id, type, attribute tree.
struct Entity {
    std::string id;
    std::string type;
    nlohmann::json attributes = nlohmann::json::object();

    /// {"id": ..., "type": ..., <attributes>} — the view template Extract
    /// rules read from.
    nlohmann::json as_json() const;

    friend bool operator==(const Entity&, const Entity&) = default;
};

/// Applies the mapping to one record. The entity id comes from the "id"
/// target when assigned (absolute values pass through, others become
/// urn:ngsi-ld:<type>:<value>), otherwise it is derived deterministically
/// from the record content.
Entity apply_mapping(const MappingSpec& spec, const nlohmann::json& record);

} // namespace dcatforge::ingest
