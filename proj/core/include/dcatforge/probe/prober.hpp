#pragma once

#include "dcatforge/error.hpp"
#include "dcatforge/mqa/probe_result.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace dcatforge::probe {

struct ProbeConfig {
    std::chrono::milliseconds timeout{5000};
    int max_parallel = 8;
    int retries = 1; // extra attempts after a no-response

    void validate() const {
        if (timeout.count() <= 0) throw Error("probe timeout must be positive");
        if (max_parallel < 1) throw Error("probe parallelism must be at least 1");
        if (retries < 0) throw Error("probe retries must be non-negative");
    }
};

/// Accessible iff status is in the 200 or 300 range; no-response never is.
inline bool classify_accessible(std::optional<int> status) {
    return status.has_value() && *status >= 200 && *status <= 399;
}

/// Answers one HEAD request. Implementations must be callable from several
/// worker threads at once.
class StatusResolver {
public:
    virtual ~StatusResolver() = default;
    virtual std::optional<int> head(const std::string& url) = 0;
};

/// Deterministic resolver backed by a URL -> status table. URLs missing from
/// the table resolve to no-response.
class StubResolver : public StatusResolver {
public:
    StubResolver() = default;
    explicit StubResolver(std::map<std::string, std::optional<int>> table)
        : table_(std::move(table)) {}

    /// Two whitespace-separated columns per line: URL, then a status code or
    /// `none`. '#' starts a comment line.
    static StubResolver from_text(std::string_view text);
    static StubResolver from_file(const std::filesystem::path& file);

    void set(std::string url, std::optional<int> status) { table_[std::move(url)] = status; }
    std::optional<int> head(const std::string& url) override;

private:
    std::map<std::string, std::optional<int>> table_;
};

/// Real HTTP/1.1 HEAD resolver (follows up to 5 redirects, sends
/// User-Agent: dcat-forge-prober/1.0). Failures of any kind resolve to
/// no-response.
std::unique_ptr<StatusResolver> make_live_resolver(const ProbeConfig& cfg);

/// Probes every URL once (retrying no-responses per cfg.retries) on a
/// bounded worker pool. Total: the result has exactly one entry per input
/// URL; nothing is dropped on timeout, and the map does not depend on
/// completion order.
mqa::ProbeResultMap probe_all(const std::set<std::string>& urls, StatusResolver& resolver,
                              const ProbeConfig& cfg);

} // namespace dcatforge::probe
