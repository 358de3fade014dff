#pragma once

#include "dcatforge/oai/server.hpp"
#include "dcatforge/rdf/graph.hpp"
#include "dcatforge/store/store.hpp"
#include "dcatforge/util/clock.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dcatforge::oai {

/// The endpoint could not be reached or answered outside HTTP semantics.
class TransportError : public Error {
public:
    using Error::Error;
};

/// The endpoint answered, but not with legal OAI-PMH (malformed XML,
/// protocol error code, illegal token flow, duplicate records).
class ProtocolError : public Error {
public:
    using Error::Error;
};

struct OaiRecordHeader {
    std::string identifier;
    util::Instant datestamp{};
    std::vector<std::string> set_specs;
    bool deleted = false;

    friend bool operator==(const OaiRecordHeader&, const OaiRecordHeader&) = default;
};

struct OaiRecord {
    OaiRecordHeader header;
    rdf::Graph metadata;

    friend bool operator==(const OaiRecord&, const OaiRecord&) = default;
};

/// Fetches one URL and returns the body. Injected so tests can run without
/// sockets.
using Transport = std::function<std::string(const std::string& url)>;

/// Follows ListRecords resumption tokens to exhaustion and returns every
/// non-deleted record exactly once, each metadata payload parsed into a
/// Graph. All-or-nothing: any failure throws and no partial list escapes.
/// An empty repository (noRecordsMatch) yields an empty list.
std::vector<OaiRecord> harvest(const std::string& endpoint, const std::string& metadata_prefix,
                               const Transport& transport);

/// In-process transport that serves `snapshot` through handle_request —
/// the loopback path used by tests and the same-process harvest command.
Transport loopback_transport(store::StoreSnapshot snapshot, OaiConfig cfg, util::Clock clock);

/// HTTP GET transport (TransportError on connection failure or non-200).
Transport http_transport();

std::string url_encode(std::string_view value);

} // namespace dcatforge::oai
