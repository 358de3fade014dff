#pragma once

#include "dcatforge/store/store.hpp"
#include "dcatforge/util/time.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dcatforge::oai {

struct OaiConfig {
    std::string repository_name = "dcatforge";
    std::string repository_id = "dcatforge"; // middle part of oai:<id>:<uuid> identifiers
    std::string base_url = "http://localhost:8080/oai";
    std::string admin_email = "admin@example.org";
    std::size_t page_size = 100;
    std::chrono::seconds token_ttl{3600};
    std::uint64_t token_key = 0x64636174666f7267ULL;
};

/// Request arguments in arrival order; duplicates are kept so they can be
/// rejected as badArgument.
using QueryArgs = std::vector<std::pair<std::string, std::string>>;

/// Handles one OAI-PMH v2 request against an immutable snapshot and returns
/// the response document (always well-formed XML; protocol problems come back
/// in-band as <error> elements). Pure: the clock is a parameter.
std::string handle_request(const store::StoreSnapshot& snapshot, const QueryArgs& args,
                           const OaiConfig& cfg, util::Instant now);

/// "oai:<repository_id>:<record id>"
std::string oai_identifier(const OaiConfig& cfg, const std::string& record_id);

} // namespace dcatforge::oai
