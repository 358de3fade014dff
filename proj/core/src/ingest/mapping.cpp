#include "dcatforge/ingest/mapping.hpp"

#include "dcatforge/ingest/json_path.hpp"
#include "dcatforge/util/ids.hpp"

#include <set>

namespace dcatforge::ingest {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    return out;
}

} // namespace

MissingSourcePath::MissingSourcePath(std::vector<std::string> paths)
    : Error("missing source paths: " + join(paths)), paths_(std::move(paths)) {}

void MappingSpec::validate() const {
    if (entity_type.empty()) throw Error("mapping: entity type is empty");
    std::set<std::string> targets;
    for (const auto& a : assignments) {
        split_path(a.target); // shape check
        split_path(a.source);
        if (!targets.insert(a.target).second) {
            throw Error("mapping: duplicate target path '" + a.target + "'");
        }
        for (const auto& drop : drops) {
            if (path_under(a.source, drop)) {
                throw Error("mapping: assignment source '" + a.source +
                            "' lies under dropped path '" + drop + "'");
            }
        }
    }
    for (const auto& drop : drops) split_path(drop);
}

nlohmann::json Entity::as_json() const {
    nlohmann::json out = attributes;
    out["id"] = id;
    out["type"] = type;
    return out;
}

Entity apply_mapping(const MappingSpec& spec, const nlohmann::json& record) {
    spec.validate();
    if (!record.is_object()) {
        throw InvalidRecord("record is not a JSON object");
    }

    std::vector<std::string> missing;
    Entity entity;
    entity.type = spec.entity_type;
    std::optional<nlohmann::json> id_value;

    for (const auto& assignment : spec.assignments) {
        const nlohmann::json* value = path_get(record, assignment.source);
        if (value == nullptr) {
            missing.push_back(assignment.source);
            continue;
        }
        if (assignment.target == "id") {
            id_value = *value;
        } else {
            path_set(entity.attributes, assignment.target, *value);
        }
    }
    if (!missing.empty()) throw MissingSourcePath(std::move(missing));

    if (id_value) {
        if (!id_value->is_string()) {
            throw InvalidRecord("id value must be a string");
        }
        const std::string raw = id_value->get<std::string>();
        if (raw.empty()) throw InvalidRecord("id value is empty");
        entity.id = util::is_absolute_iri(raw) ? raw : "urn:ngsi-ld:" + entity.type + ":" + raw;
    } else {
        // Content-derived id keeps replays reproducible.
        entity.id = "urn:ngsi-ld:" + entity.type + ":" + util::hex64(util::fnv1a64(record.dump()));
    }
    return entity;
}

} // namespace dcatforge::ingest
