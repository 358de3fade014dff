#pragma once

#include "dcatforge/dcat/dataset.hpp"
#include "dcatforge/dcat/profile.hpp"
#include "dcatforge/ingest/mapping.hpp"

#include <map>
#include <string>

namespace dcatforge::ingest {

/// A rule could not produce its field (missing extract path, wrong value
/// shape, ...). The message names the failing field.
class TemplateError : public Error {
public:
    using Error::Error;
};

enum class ContextKind { Now, SourceId, EntityCount, PortalBaseIri };

ContextKind parse_context_kind(std::string_view name); // "now", "source-id", ...
std::string_view context_kind_name(ContextKind kind);

/// One of the three provenance modes for a metadata field: extracted from
/// the entity, taken from the run context, or a constant.
struct FieldRule {
    enum class Kind { Extract, Context, Constant };

    static FieldRule extract(std::string path);
    static FieldRule context(ContextKind kind);
    static FieldRule constant(nlohmann::json value);

    Kind kind = Kind::Constant;
    std::string path;                            // Extract
    ContextKind context_kind = ContextKind::Now; // Context
    nlohmann::json constant_value;               // Constant
};

/// Field name -> rule. Recognized dataset fields: title, description,
/// identifier, keyword, theme, spatial, temporal_start, temporal_end, issued,
/// modified, publisher, contact_point, access_rights, version, landing_page;
/// distribution fields use the "distribution." prefix: access_url,
/// download_url, format, media_type, license, rights, byte_size.
struct MetadataTemplate {
    std::map<std::string, FieldRule> rules;
};

struct GenerationContext {
    std::string now_rfc3339;
    std::string source_id;
    std::size_t entity_count = 0;
    std::string portal_base_iri;
};

/// Checks that every field mandated by the profile rule set has a rule
/// (R1 -> title, R2 -> description, R3 -> distribution.access_url) and that
/// all field names are recognized. Throws TemplateError otherwise.
void validate_template(const MetadataTemplate& t, const dcat::ProfileRuleSet& rules);

/// Instantiates the template for one entity. Deterministic in (t, e, ctx);
/// the dataset IRI is portal_base_iri + "/dataset/" + a name-derived UUID of
/// (source id, entity id), and dct:identifier defaults to that UUID.
dcat::Dataset generate_metadata(const MetadataTemplate& t, const Entity& e,
                                const GenerationContext& ctx);

/// The UUID generate_metadata assigns for this (source, entity) pair.
std::string dataset_uuid(const std::string& source_id, const std::string& entity_id);

} // namespace dcatforge::ingest
