#include "dcatforge/oai/harvest.hpp"

#include "dcatforge/rdf/io.hpp"
#include "dcatforge/xml/xml.hpp"

#include <memory>
#include <set>
#include <sstream>

namespace dcatforge::oai {

namespace {

std::string list_url(const std::string& endpoint, const std::string& metadata_prefix) {
    const char join = endpoint.find('?') == std::string::npos ? '?' : '&';
    return endpoint + join + "verb=ListRecords&metadataPrefix=" + url_encode(metadata_prefix);
}

std::string token_url(const std::string& endpoint, const std::string& token) {
    const char join = endpoint.find('?') == std::string::npos ? '?' : '&';
    return endpoint + join + "verb=ListRecords&resumptionToken=" + url_encode(token);
}

OaiRecordHeader parse_header(const xml::Node& header) {
    OaiRecordHeader out;
    if (const std::string* status = header.attribute("status")) {
        out.deleted = *status == "deleted";
    }
    const xml::Node* identifier = header.first_child("identifier");
    const xml::Node* datestamp = header.first_child("datestamp");
    if (identifier == nullptr || datestamp == nullptr) {
        throw ProtocolError("record header misses identifier or datestamp");
    }
    out.identifier = identifier->trimmed_text();
    const auto parsed = util::parse_oai_datestamp(datestamp->trimmed_text(), false);
    if (!parsed) {
        throw ProtocolError("bad datestamp '" + datestamp->trimmed_text() + "' for " +
                            out.identifier);
    }
    out.datestamp = *parsed;
    for (const xml::Node* set : header.children_named("setSpec")) {
        out.set_specs.push_back(set->trimmed_text());
    }
    return out;
}

rdf::Graph parse_record_metadata(const xml::Node& metadata, const std::string& identifier) {
    if (metadata.children.size() != 1) {
        throw ProtocolError("record " + identifier + ": metadata must hold exactly one element");
    }
    const std::string payload = xml::write(metadata.children.front(), 0);
    try {
        return rdf::parse_rdfxml(payload);
    } catch (const Error& e) {
        throw ProtocolError("record " + identifier + ": metadata does not parse: " + e.what());
    }
}

} // namespace

std::string url_encode(std::string_view value) {
    std::string out;
    for (const char c : value) {
        const bool safe = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                          (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' || c == '~';
        if (safe) {
            out += c;
        } else {
            char buf[4];
            std::snprintf(buf, sizeof(buf), "%%%02X", static_cast<unsigned char>(c));
            out += buf;
        }
    }
    return out;
}

std::vector<OaiRecord> harvest(const std::string& endpoint, const std::string& metadata_prefix,
                               const Transport& transport) {
    std::vector<OaiRecord> records;
    std::set<std::string> seen_identifiers;
    std::set<std::string> seen_tokens;
    std::string url = list_url(endpoint, metadata_prefix);
    bool first_page = true;

    for (;;) {
        const std::string body = transport(url);
        xml::Node root;
        try {
            root = xml::parse_document(body);
        } catch (const xml::ParseError& e) {
            throw ProtocolError(std::string("response is not well-formed XML: ") + e.what());
        }
        if (root.name != "OAI-PMH") {
            throw ProtocolError("response root is <" + root.name + ">, expected <OAI-PMH>");
        }
        if (const xml::Node* error = root.first_child("error")) {
            const std::string* code = error->attribute("code");
            const std::string code_text = code != nullptr ? *code : "(missing code)";
            if (code_text == "noRecordsMatch" && first_page) {
                return {}; // an empty repository is a valid outcome
            }
            throw ProtocolError("server returned " + code_text + ": " + error->trimmed_text());
        }
        const xml::Node* list = root.first_child("ListRecords");
        if (list == nullptr) {
            throw ProtocolError("response carries no <ListRecords> element");
        }

        for (const xml::Node* record_node : list->children_named("record")) {
            const xml::Node* header = record_node->first_child("header");
            if (header == nullptr) throw ProtocolError("record without header");
            OaiRecord record;
            record.header = parse_header(*header);
            if (record.header.deleted) continue;
            if (!seen_identifiers.insert(record.header.identifier).second) {
                throw ProtocolError("record " + record.header.identifier +
                                    " delivered more than once");
            }
            const xml::Node* metadata = record_node->first_child("metadata");
            if (metadata == nullptr) {
                throw ProtocolError("record " + record.header.identifier + " has no metadata");
            }
            record.metadata = parse_record_metadata(*metadata, record.header.identifier);
            records.push_back(std::move(record));
        }

        const xml::Node* token = list->first_child("resumptionToken");
        if (token == nullptr) return records;
        const std::string token_text = token->trimmed_text();
        if (token_text.empty()) return records; // explicit end of an incomplete list
        if (!seen_tokens.insert(token_text).second) {
            throw ProtocolError("resumption token repeats; aborting the harvest");
        }
        url = token_url(endpoint, token_text);
        first_page = false;
    }
}

Transport loopback_transport(store::StoreSnapshot snapshot, OaiConfig cfg, util::Clock clock) {
    auto shared = std::make_shared<store::StoreSnapshot>(std::move(snapshot));
    return [shared, cfg, clock](const std::string& url) -> std::string {
        const std::size_t query_start = url.find('?');
        QueryArgs args;
        if (query_start != std::string::npos) {
            std::string_view query = std::string_view(url).substr(query_start + 1);
            std::size_t start = 0;
            while (start <= query.size()) {
                std::size_t end = query.find('&', start);
                if (end == std::string_view::npos) end = query.size();
                const std::string_view pair = query.substr(start, end - start);
                const std::size_t eq = pair.find('=');
                if (eq != std::string_view::npos) {
                    std::string name(pair.substr(0, eq));
                    std::string value(pair.substr(eq + 1));
                    // undo percent-encoding
                    std::string decoded;
                    for (std::size_t i = 0; i < value.size(); ++i) {
                        if (value[i] == '%' && i + 2 < value.size()) {
                            decoded += static_cast<char>(
                                std::stoi(value.substr(i + 1, 2), nullptr, 16));
                            i += 2;
                        } else if (value[i] == '+') {
                            decoded += ' ';
                        } else {
                            decoded += value[i];
                        }
                    }
                    args.emplace_back(std::move(name), std::move(decoded));
                }
                start = end + 1;
            }
        }
        return handle_request(*shared, args, cfg, clock.now());
    };
}

} // namespace dcatforge::oai
