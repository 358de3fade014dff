// The one translation unit that speaks HTTP for probing; keeps the header
// dependency-free.
#define CPPHTTPLIB_REDIRECT_MAX_COUNT 5
#include <httplib.h>

#include "dcatforge/probe/prober.hpp"

namespace dcatforge::probe {

namespace {

struct SplitUrl {
    std::string origin; // scheme://host[:port]
    std::string path;   // /path?query
};

std::optional<SplitUrl> split_url(const std::string& url) {
    const std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return std::nullopt;
    const std::size_t path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        return SplitUrl{url, "/"};
    }
    return SplitUrl{url.substr(0, path_start), url.substr(path_start)};
}

class LiveResolver : public StatusResolver {
public:
    explicit LiveResolver(const ProbeConfig& cfg) : cfg_(cfg) {}

    std::optional<int> head(const std::string& url) override {
        const auto split = split_url(url);
        if (!split) return std::nullopt;
        try {
            httplib::Client client(split->origin);
            client.set_follow_location(true);
            const auto seconds = cfg_.timeout.count() / 1000;
            const auto micros = cfg_.timeout.count() % 1000 * 1000;
            client.set_connection_timeout(seconds, micros);
            client.set_read_timeout(seconds, micros);
            client.set_default_headers({{"User-Agent", "dcat-forge-prober/1.0"}});
            const httplib::Result result = client.Head(split->path);
            if (!result) return std::nullopt;
            return result->status;
        } catch (...) {
            return std::nullopt;
        }
    }

private:
    ProbeConfig cfg_;
};

} // namespace

std::unique_ptr<StatusResolver> make_live_resolver(const ProbeConfig& cfg) {
    cfg.validate();
    return std::make_unique<LiveResolver>(cfg);
}

} // namespace dcatforge::probe
