#include "dcatforge/ingest/metadata_template.hpp"

#include "dcatforge/ingest/json_path.hpp"
#include "dcatforge/rdf/namespaces.hpp"
#include "dcatforge/util/ids.hpp"
#include "dcatforge/util/time.hpp"

#include <algorithm>
#include <array>

namespace dcatforge::ingest {

namespace {

constexpr std::array<std::string_view, 22> kKnownFields = {
    "title",          "description",     "identifier",
    "keyword",        "theme",           "spatial",
    "temporal_start", "temporal_end",    "issued",
    "modified",       "publisher",       "contact_point",
    "access_rights",  "version",         "landing_page",
    "distribution.access_url",           "distribution.download_url",
    "distribution.format",               "distribution.media_type",
    "distribution.license",              "distribution.rights",
    "distribution.byte_size"};

[[noreturn]] void field_error(const std::string& field, const std::string& why) {
    throw TemplateError("field '" + field + "': " + why);
}

nlohmann::json resolve(const std::string& field, const FieldRule& rule, const Entity& e,
                       const GenerationContext& ctx) {
    switch (rule.kind) {
    case FieldRule::Kind::Extract: {
        const nlohmann::json* value = path_get(e.as_json(), rule.path);
        if (value == nullptr) field_error(field, "extract path '" + rule.path + "' not found");
        return *value;
    }
    case FieldRule::Kind::Context:
        switch (rule.context_kind) {
        case ContextKind::Now: return ctx.now_rfc3339;
        case ContextKind::SourceId: return ctx.source_id;
        case ContextKind::EntityCount: return ctx.entity_count;
        case ContextKind::PortalBaseIri: return ctx.portal_base_iri;
        }
        field_error(field, "unknown context kind");
    case FieldRule::Kind::Constant: return rule.constant_value;
    }
    field_error(field, "unknown rule kind");
}

std::string as_string(const std::string& field, const nlohmann::json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
    if (value.is_number_float()) return std::to_string(value.get<double>());
    field_error(field, "expected a string value, got " + value.dump());
}

rdf::Term iri_or_literal(const std::string& s) {
    return util::is_absolute_iri(s) ? rdf::Term::iri(s) : rdf::Term::literal(s);
}

rdf::Term datetime_term(const std::string& field, const std::string& s) {
    if (!util::is_xsd_datetime(s)) field_error(field, "'" + s + "' is not an xsd:dateTime");
    return rdf::Term::typed_literal(s, ns::xsd_datetime);
}

std::vector<std::string> as_string_list(const std::string& field, const nlohmann::json& value) {
    std::vector<std::string> out;
    if (value.is_array()) {
        for (const auto& item : value) out.push_back(as_string(field, item));
    } else {
        out.push_back(as_string(field, value));
    }
    return out;
}

} // namespace

ContextKind parse_context_kind(std::string_view name) {
    if (name == "now") return ContextKind::Now;
    if (name == "source-id") return ContextKind::SourceId;
    if (name == "entity-count") return ContextKind::EntityCount;
    if (name == "portal-base-iri") return ContextKind::PortalBaseIri;
    throw TemplateError("unknown context kind '" + std::string(name) + "'");
}

std::string_view context_kind_name(ContextKind kind) {
    switch (kind) {
    case ContextKind::Now: return "now";
    case ContextKind::SourceId: return "source-id";
    case ContextKind::EntityCount: return "entity-count";
    case ContextKind::PortalBaseIri: return "portal-base-iri";
    }
    return "?";
}

FieldRule FieldRule::extract(std::string path) {
    FieldRule r;
    r.kind = Kind::Extract;
    r.path = std::move(path);
    return r;
}

FieldRule FieldRule::context(ContextKind kind) {
    FieldRule r;
    r.kind = Kind::Context;
    r.context_kind = kind;
    return r;
}

FieldRule FieldRule::constant(nlohmann::json value) {
    FieldRule r;
    r.kind = Kind::Constant;
    r.constant_value = std::move(value);
    return r;
}

void validate_template(const MetadataTemplate& t, const dcat::ProfileRuleSet& rules) {
    for (const auto& [field, rule] : t.rules) {
        if (std::find(kKnownFields.begin(), kKnownFields.end(), field) == kKnownFields.end()) {
            throw TemplateError("unknown template field '" + field + "'");
        }
        if (rule.kind == FieldRule::Kind::Extract && rule.path.empty()) {
            field_error(field, "extract rule without a path");
        }
    }
    const auto require = [&](const char* rule_id, const char* field) {
        if (rules.has_rule(rule_id) && !t.rules.contains(field)) {
            throw TemplateError(std::string("mandatory field '") + field + "' (profile rule " +
                                rule_id + ") has no rule");
        }
    };
    require("R1", "title");
    require("R2", "description");
    require("R3", "distribution.access_url");
}

std::string dataset_uuid(const std::string& source_id, const std::string& entity_id) {
    return util::name_uuid(source_id + "|" + entity_id);
}

dcat::Dataset generate_metadata(const MetadataTemplate& t, const Entity& e,
                                const GenerationContext& ctx) {
    if (ctx.portal_base_iri.empty() || !util::is_absolute_iri(ctx.portal_base_iri)) {
        throw TemplateError("portal base IRI '" + ctx.portal_base_iri + "' is not absolute");
    }

    const std::string uuid = dataset_uuid(ctx.source_id, e.id);
    const std::string dataset_iri = ctx.portal_base_iri + "/dataset/" + uuid;

    dcat::Dataset d;
    d.id = rdf::Term::iri(dataset_iri);

    dcat::Distribution dist;
    bool has_distribution = false;
    std::optional<std::string> period_start, period_end;
    std::string identifier = uuid;

    for (const auto& [field, rule] : t.rules) {
        const nlohmann::json value = resolve(field, rule, e, ctx);

        if (field == "title") {
            d.title = rdf::Term::literal(as_string(field, value));
        } else if (field == "description") {
            d.description = rdf::Term::literal(as_string(field, value));
        } else if (field == "identifier") {
            identifier = as_string(field, value);
        } else if (field == "keyword") {
            for (auto& k : as_string_list(field, value)) {
                d.keywords.push_back(rdf::Term::literal(std::move(k)));
            }
        } else if (field == "theme") {
            for (const auto& theme : as_string_list(field, value)) {
                if (!util::is_absolute_iri(theme)) {
                    field_error(field, "theme '" + theme + "' is not an absolute IRI");
                }
                d.themes.push_back(rdf::Term::iri(theme));
            }
        } else if (field == "spatial") {
            d.spatial = iri_or_literal(as_string(field, value));
        } else if (field == "temporal_start") {
            period_start = as_string(field, value);
        } else if (field == "temporal_end") {
            period_end = as_string(field, value);
        } else if (field == "issued") {
            d.issued = datetime_term(field, as_string(field, value));
        } else if (field == "modified") {
            d.modified = datetime_term(field, as_string(field, value));
        } else if (field == "publisher") {
            const std::string v = as_string(field, value);
            if (util::is_absolute_iri(v)) {
                d.publisher = dcat::NodeRef{rdf::Term::iri(v), {}};
            } else {
                const rdf::Term node = rdf::Term::blank("pub0");
                std::vector<rdf::Triple> props;
                props.push_back({node, rdf::Term::iri(ns::rdf_type),
                                 rdf::Term::iri(ns::iri(ns::foaf, "Organization"))});
                props.push_back({node, rdf::Term::iri(ns::iri(ns::foaf, "name")),
                                 rdf::Term::literal(v)});
                std::sort(props.begin(), props.end());
                d.publisher = dcat::NodeRef{node, std::move(props)};
            }
        } else if (field == "contact_point") {
            if (value.is_object()) {
                const rdf::Term node = rdf::Term::blank("cp0");
                std::vector<rdf::Triple> props;
                props.push_back({node, rdf::Term::iri(ns::rdf_type),
                                 rdf::Term::iri(ns::iri(ns::vcard, "Kind"))});
                if (value.contains("name")) {
                    props.push_back({node, rdf::Term::iri(ns::iri(ns::vcard, "fn")),
                                     rdf::Term::literal(as_string(field, value.at("name")))});
                }
                if (value.contains("email")) {
                    props.push_back(
                        {node, rdf::Term::iri(ns::iri(ns::vcard, "hasEmail")),
                         rdf::Term::iri("mailto:" + as_string(field, value.at("email")))});
                }
                std::sort(props.begin(), props.end());
                d.contact_point = dcat::NodeRef{node, std::move(props)};
            } else {
                const std::string v = as_string(field, value);
                if (!util::is_absolute_iri(v)) {
                    field_error(field, "contact point '" + v +
                                           "' must be an IRI or an object with name/email");
                }
                d.contact_point = dcat::NodeRef{rdf::Term::iri(v), {}};
            }
        } else if (field == "access_rights") {
            d.access_rights = iri_or_literal(as_string(field, value));
        } else if (field == "version") {
            d.version_info = rdf::Term::literal(as_string(field, value));
        } else if (field == "landing_page") {
            const std::string v = as_string(field, value);
            if (!util::is_absolute_iri(v)) field_error(field, "landing page is not an IRI");
            d.landing_page = rdf::Term::iri(v);
        } else if (field.starts_with("distribution.")) {
            has_distribution = true;
            const std::string sub = field.substr(std::string_view("distribution.").size());
            if (sub == "access_url" || sub == "download_url") {
                const std::string v = as_string(field, value);
                if (!util::is_absolute_iri(v)) field_error(field, "'" + v + "' is not an IRI");
                (sub == "access_url" ? dist.access_url : dist.download_url) = rdf::Term::iri(v);
            } else if (sub == "format") {
                dist.format = iri_or_literal(as_string(field, value));
            } else if (sub == "media_type") {
                dist.media_type = rdf::Term::literal(as_string(field, value));
            } else if (sub == "license") {
                dist.license = iri_or_literal(as_string(field, value));
            } else if (sub == "rights") {
                dist.rights = iri_or_literal(as_string(field, value));
            } else if (sub == "byte_size") {
                if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
                    field_error(field, "byte size must be a non-negative integer");
                }
                dist.byte_size = rdf::Term::typed_literal(
                    std::to_string(value.get<std::int64_t>()), ns::iri(ns::xsd, "decimal"));
            } else {
                field_error(field, "unknown distribution field");
            }
        } else {
            field_error(field, "unknown template field");
        }
    }

    if (period_start || period_end) {
        const rdf::Term node = rdf::Term::blank("t0");
        std::vector<rdf::Triple> props;
        props.push_back({node, rdf::Term::iri(ns::rdf_type),
                         rdf::Term::iri(ns::iri(ns::dct, "PeriodOfTime"))});
        if (period_start) {
            props.push_back({node, rdf::Term::iri(ns::iri(ns::dcat, "startDate")),
                             datetime_term("temporal_start", *period_start)});
        }
        if (period_end) {
            props.push_back({node, rdf::Term::iri(ns::iri(ns::dcat, "endDate")),
                             datetime_term("temporal_end", *period_end)});
        }
        std::sort(props.begin(), props.end());
        d.temporal = dcat::NodeRef{node, std::move(props)};
    }

    if (has_distribution) {
        dist.id = rdf::Term::iri(dataset_iri + "/resource/1");
        dist.residue.push_back({dist.id, rdf::Term::iri(ns::rdf_type),
                                rdf::Term::iri(ns::dcat_distribution_class)});
        std::sort(dist.residue.begin(), dist.residue.end());
        d.distributions.push_back(std::move(dist));
    }

    d.residue.push_back({d.id, rdf::Term::iri(ns::iri(ns::dct, "identifier")),
                         rdf::Term::literal(identifier)});
    std::sort(d.residue.begin(), d.residue.end());
    std::sort(d.keywords.begin(), d.keywords.end());
    std::sort(d.themes.begin(), d.themes.end());
    return d;
}

} // namespace dcatforge::ingest
