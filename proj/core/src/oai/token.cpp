#include "dcatforge/oai/token.hpp"

#include "dcatforge/util/base64.hpp"
#include "dcatforge/util/ids.hpp"

#include <vector>

namespace dcatforge::oai {

namespace {

constexpr std::string_view kVersion = "v1";

// '|' is the field separator; escape it and the escape char inside fields.
std::string escape_field(std::string_view s) {
    std::string out;
    for (const char c : s) {
        if (c == '|' || c == '%') {
            char buf[4];
            std::snprintf(buf, sizeof(buf), "%%%02x", static_cast<unsigned char>(c));
            out += buf;
        } else {
            out += c;
        }
    }
    return out;
}

std::optional<std::string> unescape_field(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '%') {
            out += s[i];
            continue;
        }
        if (i + 2 >= s.size()) return std::nullopt;
        const auto hex = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            return -1;
        };
        const int hi = hex(s[i + 1]), lo = hex(s[i + 2]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out += static_cast<char>(hi * 16 + lo);
        i += 2;
    }
    return out;
}

std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '|') {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

std::string encode_token(const ResumptionToken& token, std::uint64_t key) {
    std::string payload;
    payload += kVersion;
    payload += '|';
    payload += escape_field(token.snapshot_id);
    payload += '|';
    payload += std::to_string(token.cursor);
    payload += '|';
    payload += util::format_rfc3339(token.expiry);
    payload += '|';
    payload += escape_field(token.metadata_prefix);
    payload += '|';
    payload += escape_field(token.from);
    payload += '|';
    payload += escape_field(token.until);
    payload += '|';
    payload += escape_field(token.set);
    const std::string checksum = util::hex64(util::fnv1a64(payload, key));
    return util::base64_encode(payload + "|" + checksum);
}

std::optional<ResumptionToken> decode_token(std::string_view encoded, std::uint64_t key) {
    const auto decoded = util::base64_decode(encoded);
    if (!decoded) return std::nullopt;
    const auto fields = split_fields(*decoded);
    if (fields.size() != 9 || fields[0] != kVersion) return std::nullopt;

    const std::size_t payload_len = decoded->size() - fields[8].size() - 1;
    const std::string payload = decoded->substr(0, payload_len);
    if (util::hex64(util::fnv1a64(payload, key)) != fields[8]) return std::nullopt;

    ResumptionToken token;
    const auto snapshot = unescape_field(fields[1]);
    if (!snapshot) return std::nullopt;
    token.snapshot_id = *snapshot;

    if (fields[2].empty()) return std::nullopt;
    std::size_t cursor = 0;
    for (const char c : fields[2]) {
        if (c < '0' || c > '9') return std::nullopt;
        cursor = cursor * 10 + static_cast<std::size_t>(c - '0');
    }
    token.cursor = cursor;

    const auto expiry = util::parse_rfc3339(fields[3]);
    if (!expiry) return std::nullopt;
    token.expiry = *expiry;

    const auto prefix = unescape_field(fields[4]);
    const auto from = unescape_field(fields[5]);
    const auto until = unescape_field(fields[6]);
    const auto set = unescape_field(fields[7]);
    if (!prefix || !from || !until || !set) return std::nullopt;
    token.metadata_prefix = *prefix;
    token.from = *from;
    token.until = *until;
    token.set = *set;
    return token;
}

} // namespace dcatforge::oai
