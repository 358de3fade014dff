#include "dcatforge/probe/prober.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

namespace dcatforge::probe {

StubResolver StubResolver::from_text(std::string_view text) {
    std::map<std::string, std::optional<int>> table;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string url, status;
        if (!(fields >> url) || url.front() == '#') continue;
        if (!(fields >> status)) {
            throw Error("probe stub line " + std::to_string(line_no) + ": missing status column");
        }
        if (status == "none") {
            table[url] = std::nullopt;
        } else {
            try {
                table[url] = std::stoi(status);
            } catch (...) {
                throw Error("probe stub line " + std::to_string(line_no) + ": bad status '" +
                            status + "'");
            }
        }
    }
    return StubResolver(std::move(table));
}

StubResolver StubResolver::from_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open probe stub file " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_text(buffer.str());
}

std::optional<int> StubResolver::head(const std::string& url) {
    const auto it = table_.find(url);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

mqa::ProbeResultMap probe_all(const std::set<std::string>& urls, StatusResolver& resolver,
                              const ProbeConfig& cfg) {
    cfg.validate();
    const std::vector<std::string> list(urls.begin(), urls.end());
    std::vector<std::optional<int>> statuses(list.size());

    const auto worker_body = [&](std::atomic<std::size_t>& next) {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= list.size()) return;
            std::optional<int> status = resolver.head(list[i]);
            for (int attempt = 0; !status.has_value() && attempt < cfg.retries; ++attempt) {
                status = resolver.head(list[i]); // retry only on no-response
            }
            statuses[i] = status;
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(cfg.max_parallel), list.size());
    if (workers <= 1) {
        std::atomic<std::size_t> next{0};
        worker_body(next);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] { worker_body(next); });
        }
        for (auto& t : pool) t.join();
    }

    mqa::ProbeResultMap out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        out[list[i]] = mqa::ProbeOutcome{statuses[i]};
    }
    return out;
}

} // namespace dcatforge::probe
