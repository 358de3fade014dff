#pragma once

#include "dcatforge/util/time.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace dcatforge::oai {

/// Stateless-verifiable pagination token. The token string is
/// base64("v1|<snapshot>|<cursor>|<expiry>|<prefix>|<from>|<until>|<set>|<checksum>"),
/// where the checksum is keyed FNV-1a over everything before it; see
/// docs/oai.md for the bit-exact layout. Carrying the original list
/// arguments keeps the server table-free: a continuation request alone
/// reconstructs the query.
struct ResumptionToken {
    std::string snapshot_id;
    std::size_t cursor = 0;
    util::Instant expiry{};
    std::string metadata_prefix;
    std::string from;  // verbatim request arguments, empty when absent
    std::string until;
    std::string set;

    friend bool operator==(const ResumptionToken&, const ResumptionToken&) = default;
};

std::string encode_token(const ResumptionToken& token, std::uint64_t key);

/// Strict decode + checksum verification; nullopt on any tampering or
/// truncation.
std::optional<ResumptionToken> decode_token(std::string_view encoded, std::uint64_t key);

} // namespace dcatforge::oai
