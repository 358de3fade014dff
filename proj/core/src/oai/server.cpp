#include "dcatforge/oai/server.hpp"

#include "dcatforge/oai/token.hpp"
#include "dcatforge/rdf/io.hpp"
#include "dcatforge/rdf/namespaces.hpp"
#include "dcatforge/xml/xml.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

namespace dcatforge::oai {

namespace {

constexpr std::string_view kOaiNs = "http://www.openarchives.org/OAI/2.0/";
constexpr std::string_view kOaiDcNs = "http://www.openarchives.org/OAI/2.0/oai_dc/";

const std::set<std::string> kVerbs = {"Identify",        "ListMetadataFormats", "ListSets",
                                      "ListIdentifiers", "ListRecords",         "GetRecord"};

struct OaiError {
    std::string code;
    std::string message;
};

struct RequestContext {
    const store::StoreSnapshot& snapshot;
    const OaiConfig& cfg;
    util::Instant now;
    std::string verb;
    std::map<std::string, std::string> args; // validated, unique
};

std::string strip_xml_decl(std::string xml) {
    if (xml.starts_with("<?xml")) {
        const std::size_t end = xml.find("?>");
        if (end != std::string::npos) {
            std::size_t start = end + 2;
            while (start < xml.size() && (xml[start] == '\n' || xml[start] == '\r')) ++start;
            xml.erase(0, start);
        }
    }
    return xml;
}

std::string indent_block(const std::string& text, const std::string& pad) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        if (end > start) out += pad + text.substr(start, end - start);
        out += '\n';
        start = end + 1;
    }
    return out;
}

std::string envelope(const RequestContext& ctx, bool echo_args, const std::string& body) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<OAI-PMH xmlns=\"" << kOaiNs << "\"\n"
        << "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
        << "         xsi:schemaLocation=\"http://www.openarchives.org/OAI/2.0/ "
           "http://www.openarchives.org/OAI/2.0/OAI-PMH.xsd\">\n";
    out << "  <responseDate>" << util::format_rfc3339(ctx.now) << "</responseDate>\n";
    out << "  <request";
    if (echo_args) {
        if (!ctx.verb.empty()) out << " verb=\"" << xml::escape_attribute(ctx.verb) << "\"";
        for (const auto& [name, value] : ctx.args) {
            out << " " << name << "=\"" << xml::escape_attribute(value) << "\"";
        }
    }
    out << ">" << xml::escape_text(ctx.cfg.base_url) << "</request>\n";
    out << body;
    out << "</OAI-PMH>\n";
    return out.str();
}

std::string error_response(const RequestContext& ctx, const OaiError& error) {
    // Per protocol, badVerb/badArgument responses must not echo attributes.
    const bool echo = error.code != "badVerb" && error.code != "badArgument";
    std::ostringstream body;
    body << "  <error code=\"" << error.code << "\">" << xml::escape_text(error.message)
         << "</error>\n";
    return envelope(ctx, echo, body.str());
}

/// First dct:title of the first dcat:Dataset subject, for the Dublin Core
/// rendering.
std::optional<std::string> dataset_title(const rdf::Graph& g) {
    auto subjects = g.subjects_of_type(ns::dcat_dataset_class);
    std::sort(subjects.begin(), subjects.end());
    for (const auto& s : subjects) {
        const auto title = g.first_object(s, ns::iri(ns::dct, "title"));
        if (title && title->is_literal()) return title->value();
    }
    return std::nullopt;
}

std::string render_metadata(const store::StoredDataset& record, const std::string& prefix) {
    if (prefix == "dcat_ap") {
        return strip_xml_decl(rdf::serialize_rdfxml(record.metadata));
    }
    // oai_dc: the mandatory minimal Dublin Core rendering.
    std::ostringstream out;
    out << "<oai_dc:dc xmlns:oai_dc=\"" << kOaiDcNs << "\"\n"
        << "           xmlns:dc=\"http://purl.org/dc/elements/1.1/\"\n"
        << "           xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
        << "           xsi:schemaLocation=\"" << kOaiDcNs
        << " http://www.openarchives.org/OAI/2.0/oai_dc.xsd\">\n";
    out << "  <dc:identifier>" << xml::escape_text(record.id) << "</dc:identifier>\n";
    if (const auto title = dataset_title(record.metadata)) {
        out << "  <dc:title>" << xml::escape_text(*title) << "</dc:title>\n";
    }
    out << "</oai_dc:dc>\n";
    return out.str();
}

std::string render_header(const RequestContext& ctx, const store::StoredDataset& record,
                          const std::string& pad) {
    std::ostringstream out;
    out << pad << "<header>\n";
    out << pad << "  <identifier>" << xml::escape_text(oai_identifier(ctx.cfg, record.id))
        << "</identifier>\n";
    out << pad << "  <datestamp>" << util::format_rfc3339(record.datestamp) << "</datestamp>\n";
    out << pad << "  <setSpec>" << xml::escape_text(record.organization) << "</setSpec>\n";
    out << pad << "</header>\n";
    return out.str();
}

std::string render_record(const RequestContext& ctx, const store::StoredDataset& record,
                          const std::string& prefix, const std::string& pad) {
    std::ostringstream out;
    out << pad << "<record>\n";
    out << render_header(ctx, record, pad + "  ");
    out << pad << "  <metadata>\n";
    out << indent_block(render_metadata(record, prefix), pad + "    ");
    out << pad << "  </metadata>\n";
    out << pad << "</record>\n";
    return out.str();
}

// --- verb handlers; each returns a body or an OaiError ---------------------

using VerbResult = std::pair<std::optional<OaiError>, std::string>;

VerbResult ok(std::string body) { return {std::nullopt, std::move(body)}; }
VerbResult err(std::string code, std::string message) {
    return {OaiError{std::move(code), std::move(message)}, {}};
}

VerbResult do_identify(const RequestContext& ctx) {
    std::string earliest = "1970-01-01T00:00:00Z";
    if (!ctx.snapshot.records.empty()) {
        earliest = util::format_rfc3339(ctx.snapshot.records.front().datestamp);
    }
    std::ostringstream out;
    out << "  <Identify>\n";
    out << "    <repositoryName>" << xml::escape_text(ctx.cfg.repository_name)
        << "</repositoryName>\n";
    out << "    <baseURL>" << xml::escape_text(ctx.cfg.base_url) << "</baseURL>\n";
    out << "    <protocolVersion>2.0</protocolVersion>\n";
    out << "    <adminEmail>" << xml::escape_text(ctx.cfg.admin_email) << "</adminEmail>\n";
    out << "    <earliestDatestamp>" << earliest << "</earliestDatestamp>\n";
    out << "    <deletedRecord>no</deletedRecord>\n";
    out << "    <granularity>YYYY-MM-DDThh:mm:ssZ</granularity>\n";
    out << "  </Identify>\n";
    return ok(out.str());
}

VerbResult do_list_metadata_formats(const RequestContext& ctx) {
    if (const auto it = ctx.args.find("identifier"); it != ctx.args.end()) {
        const std::string expected_prefix = "oai:" + ctx.cfg.repository_id + ":";
        if (!it->second.starts_with(expected_prefix)) {
            return err("idDoesNotExist", "unknown identifier " + it->second);
        }
        const std::string id = it->second.substr(expected_prefix.size());
        const bool found = std::any_of(ctx.snapshot.records.begin(), ctx.snapshot.records.end(),
                                       [&](const auto& r) { return r.id == id; });
        if (!found) return err("idDoesNotExist", "unknown identifier " + it->second);
    }
    std::ostringstream out;
    out << "  <ListMetadataFormats>\n";
    out << "    <metadataFormat>\n"
        << "      <metadataPrefix>dcat_ap</metadataPrefix>\n"
        << "      <schema>http://www.w3.org/1999/02/22-rdf-syntax-ns</schema>\n"
        << "      <metadataNamespace>http://www.w3.org/ns/dcat#</metadataNamespace>\n"
        << "    </metadataFormat>\n";
    out << "    <metadataFormat>\n"
        << "      <metadataPrefix>oai_dc</metadataPrefix>\n"
        << "      <schema>http://www.openarchives.org/OAI/2.0/oai_dc.xsd</schema>\n"
        << "      <metadataNamespace>" << kOaiDcNs << "</metadataNamespace>\n"
        << "    </metadataFormat>\n";
    out << "  </ListMetadataFormats>\n";
    return ok(out.str());
}

VerbResult do_list_sets(const RequestContext& ctx) {
    if (ctx.args.contains("resumptionToken")) {
        return err("badResumptionToken", "set lists are never paginated here");
    }
    std::set<std::string> organizations;
    for (const auto& r : ctx.snapshot.records) organizations.insert(r.organization);
    if (organizations.empty()) {
        return err("noSetHierarchy", "this repository currently defines no sets");
    }
    std::ostringstream out;
    out << "  <ListSets>\n";
    for (const auto& org : organizations) {
        out << "    <set>\n";
        out << "      <setSpec>" << xml::escape_text(org) << "</setSpec>\n";
        out << "      <setName>" << xml::escape_text(org) << "</setName>\n";
        out << "    </set>\n";
    }
    out << "  </ListSets>\n";
    return ok(out.str());
}

struct ListQuery {
    std::string prefix;
    std::string from;  // verbatim argument text
    std::string until;
    std::string set;
    std::size_t cursor = 0;
    bool resumed = false;
};

/// Builds the filtered record list or reports the protocol error to return.
std::variant<std::vector<store::StoredDataset>, OaiError> run_list_query(
    const RequestContext& ctx, const ListQuery& q) {
    if (q.prefix != "dcat_ap" && q.prefix != "oai_dc") {
        return OaiError{"cannotDisseminateFormat",
                        "metadataPrefix '" + q.prefix + "' is not supported"};
    }
    store::ListFilter filter;
    if (!q.set.empty()) filter.organization = q.set;
    if (!q.from.empty()) {
        const auto t = util::parse_oai_datestamp(q.from, /*end_of_day=*/false);
        if (!t) return OaiError{"badArgument", "bad from datestamp '" + q.from + "'"};
        filter.from = t;
    }
    if (!q.until.empty()) {
        const auto t = util::parse_oai_datestamp(q.until, /*end_of_day=*/true);
        if (!t) return OaiError{"badArgument", "bad until datestamp '" + q.until + "'"};
        filter.until = t;
    }
    if (!q.from.empty() && !q.until.empty()) {
        if (util::is_day_granularity(q.from) != util::is_day_granularity(q.until)) {
            return OaiError{"badArgument", "from/until granularities differ"};
        }
        if (filter.from > filter.until) {
            return OaiError{"badArgument", "from is later than until"};
        }
    }
    return store::list(ctx.snapshot, filter);
}

VerbResult do_list(const RequestContext& ctx, bool with_metadata) {
    ListQuery q;
    if (const auto it = ctx.args.find("resumptionToken"); it != ctx.args.end()) {
        const auto token = decode_token(it->second, ctx.cfg.token_key);
        if (!token) return err("badResumptionToken", "token does not verify");
        if (token->expiry < ctx.now) return err("badResumptionToken", "token expired");
        if (token->snapshot_id != ctx.snapshot.id) {
            return err("badResumptionToken", "repository changed since the token was issued");
        }
        q.prefix = token->metadata_prefix;
        q.from = token->from;
        q.until = token->until;
        q.set = token->set;
        q.cursor = token->cursor;
        q.resumed = true;
    } else {
        q.prefix = ctx.args.at("metadataPrefix");
        if (const auto f = ctx.args.find("from"); f != ctx.args.end()) q.from = f->second;
        if (const auto u = ctx.args.find("until"); u != ctx.args.end()) q.until = u->second;
        if (const auto s = ctx.args.find("set"); s != ctx.args.end()) q.set = s->second;
    }

    const auto query_result = run_list_query(ctx, q);
    if (std::holds_alternative<OaiError>(query_result)) {
        auto e = std::get<OaiError>(query_result);
        return err(std::move(e.code), std::move(e.message));
    }
    const auto& matches = std::get<std::vector<store::StoredDataset>>(query_result);
    if (matches.empty()) return err("noRecordsMatch", "no records match the request");
    if (q.cursor >= matches.size()) {
        return err("badResumptionToken", "token cursor is out of range");
    }

    const std::size_t end = std::min(matches.size(), q.cursor + ctx.cfg.page_size);
    std::ostringstream out;
    const char* element = with_metadata ? "ListRecords" : "ListIdentifiers";
    out << "  <" << element << ">\n";
    for (std::size_t i = q.cursor; i < end; ++i) {
        if (with_metadata) {
            out << render_record(ctx, matches[i], q.prefix, "    ");
        } else {
            out << render_header(ctx, matches[i], "    ");
        }
    }
    if (end < matches.size()) {
        ResumptionToken next;
        next.snapshot_id = ctx.snapshot.id;
        next.cursor = end;
        next.expiry = ctx.now + ctx.cfg.token_ttl;
        next.metadata_prefix = q.prefix;
        next.from = q.from;
        next.until = q.until;
        next.set = q.set;
        out << "    <resumptionToken completeListSize=\"" << matches.size() << "\" cursor=\""
            << q.cursor << "\">" << encode_token(next, ctx.cfg.token_key)
            << "</resumptionToken>\n";
    } else if (q.resumed) {
        // Closing an incomplete-list sequence: empty token element.
        out << "    <resumptionToken completeListSize=\"" << matches.size() << "\" cursor=\""
            << q.cursor << "\"/>\n";
    }
    out << "  </" << element << ">\n";
    return ok(out.str());
}

VerbResult do_get_record(const RequestContext& ctx) {
    const std::string& identifier = ctx.args.at("identifier");
    const std::string& prefix = ctx.args.at("metadataPrefix");
    if (prefix != "dcat_ap" && prefix != "oai_dc") {
        return err("cannotDisseminateFormat", "metadataPrefix '" + prefix + "' is not supported");
    }
    const std::string expected_prefix = "oai:" + ctx.cfg.repository_id + ":";
    if (!identifier.starts_with(expected_prefix)) {
        return err("idDoesNotExist", "unknown identifier " + identifier);
    }
    const std::string id = identifier.substr(expected_prefix.size());
    for (const auto& record : ctx.snapshot.records) {
        if (record.id == id) {
            std::ostringstream out;
            out << "  <GetRecord>\n";
            out << render_record(ctx, record, prefix, "    ");
            out << "  </GetRecord>\n";
            return ok(out.str());
        }
    }
    return err("idDoesNotExist", "unknown identifier " + identifier);
}

/// Per-verb argument legality (OAI-PMH v2 §3.1.1 tables).
std::optional<OaiError> validate_args(const std::string& verb,
                                      const std::map<std::string, std::string>& args) {
    static const std::map<std::string, std::set<std::string>> allowed = {
        {"Identify", {}},
        {"ListMetadataFormats", {"identifier"}},
        {"ListSets", {"resumptionToken"}},
        {"ListIdentifiers", {"metadataPrefix", "from", "until", "set", "resumptionToken"}},
        {"ListRecords", {"metadataPrefix", "from", "until", "set", "resumptionToken"}},
        {"GetRecord", {"identifier", "metadataPrefix"}},
    };
    const auto& legal = allowed.at(verb);
    for (const auto& [name, value] : args) {
        if (!legal.contains(name)) {
            return OaiError{"badArgument", "argument '" + name + "' is illegal for " + verb};
        }
    }
    if (verb == "ListIdentifiers" || verb == "ListRecords") {
        if (args.contains("resumptionToken")) {
            if (args.size() != 1) {
                return OaiError{"badArgument", "resumptionToken is an exclusive argument"};
            }
        } else if (!args.contains("metadataPrefix")) {
            return OaiError{"badArgument", "metadataPrefix is required"};
        }
    }
    if (verb == "GetRecord") {
        if (!args.contains("identifier") || !args.contains("metadataPrefix")) {
            return OaiError{"badArgument", "GetRecord requires identifier and metadataPrefix"};
        }
    }
    return std::nullopt;
}

} // namespace

std::string oai_identifier(const OaiConfig& cfg, const std::string& record_id) {
    return "oai:" + cfg.repository_id + ":" + record_id;
}

std::string handle_request(const store::StoreSnapshot& snapshot, const QueryArgs& args,
                           const OaiConfig& cfg, util::Instant now) {
    RequestContext ctx{snapshot, cfg, now, {}, {}};

    // Collapse arguments, tracking duplicates and the verb.
    std::map<std::string, std::size_t> counts;
    for (const auto& [name, value] : args) {
        ++counts[name];
        if (name == "verb") {
            ctx.verb = value;
        } else {
            ctx.args[name] = value;
        }
    }
    for (const auto& [name, count] : counts) {
        if (count > 1) {
            return error_response(ctx, {"badArgument", "argument '" + name + "' repeats"});
        }
    }
    if (!kVerbs.contains(ctx.verb)) {
        return error_response(ctx, {"badVerb", "unknown or missing verb '" + ctx.verb + "'"});
    }
    if (const auto bad = validate_args(ctx.verb, ctx.args)) {
        return error_response(ctx, *bad);
    }

    VerbResult result = ok("");
    if (ctx.verb == "Identify") result = do_identify(ctx);
    else if (ctx.verb == "ListMetadataFormats") result = do_list_metadata_formats(ctx);
    else if (ctx.verb == "ListSets") result = do_list_sets(ctx);
    else if (ctx.verb == "ListIdentifiers") result = do_list(ctx, /*with_metadata=*/false);
    else if (ctx.verb == "ListRecords") result = do_list(ctx, /*with_metadata=*/true);
    else if (ctx.verb == "GetRecord") result = do_get_record(ctx);

    if (result.first) return error_response(ctx, *result.first);
    return envelope(ctx, /*echo_args=*/true, result.second);
}

} // namespace dcatforge::oai
