#include "dcatforge/store/store.hpp"

#include "dcatforge/rdf/io.hpp"
#include "dcatforge/util/ids.hpp"
#include "dcatforge/util/time.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <unistd.h>

namespace dcatforge::store {

namespace {

constexpr std::string_view kIndexName = "index.log";

bool valid_organization(const std::string& org) {
    if (org.empty()) return false;
    for (const char c : org) {
        if (!std::islower(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '_')
            return false;
    }
    return true;
}

void fsync_path(const std::filesystem::path& path) {
    const int fd = ::open(path.c_str(), O_RDONLY);
    if (fd >= 0) {
        ::fsync(fd);
        ::close(fd);
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw StorageError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw StorageError("short write to " + tmp.string());
    }
    fsync_path(tmp);
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw StorageError("rename " + tmp.string() + " -> " + path.string() + ": " +
                               ec.message());
}

} // namespace

CatalogStore::CatalogStore(std::filesystem::path root) : root_(std::move(root)) {
    std::error_code ec;
    std::filesystem::create_directories(root_, ec);
    if (ec) throw StorageError("cannot create store directory " + root_.string());

    const std::filesystem::path index_path = root_ / kIndexName;
    std::ifstream in(index_path);
    if (!in) return; // fresh store
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string id, org, stamp;
        if (!std::getline(fields, id, '\t') || !std::getline(fields, org, '\t') ||
            !std::getline(fields, stamp, '\t')) {
            throw StorageError("corrupt index line " + std::to_string(line_no) + " in " +
                               index_path.string());
        }
        const auto parsed = util::parse_rfc3339(stamp);
        if (!parsed) {
            throw StorageError("bad datestamp '" + stamp + "' in " + index_path.string());
        }
        index_[id] = IndexEntry{org, *parsed}; // later lines win
    }
}

std::string CatalogStore::write_record(const StoredDataset& dataset, util::Instant datestamp) {
    if (!util::looks_like_uuid(dataset.id)) {
        throw StorageError("dataset id '" + dataset.id + "' is not UUID-shaped");
    }
    if (!valid_organization(dataset.organization)) {
        throw StorageError("organization '" + dataset.organization + "' is not a valid slug");
    }
    if (dataset.metadata.empty()) {
        throw StorageError("refusing to store an empty metadata graph for " + dataset.id);
    }

    const std::filesystem::path org_dir = root_ / dataset.organization;
    std::error_code ec;
    std::filesystem::create_directories(org_dir, ec);
    if (ec) throw StorageError("cannot create " + org_dir.string());

    // Upsert into a different organization leaves no orphan file behind.
    const auto previous = index_.find(dataset.id);
    if (previous != index_.end() && previous->second.organization != dataset.organization) {
        std::filesystem::remove(root_ / previous->second.organization / (dataset.id + ".rdf"), ec);
    }

    write_file_atomic(org_dir / (dataset.id + ".rdf"), rdf::serialize_rdfxml(dataset.metadata));
    if (dataset.payload_ref) {
        write_file_atomic(org_dir / (dataset.id + ".ref"), *dataset.payload_ref + "\n");
    } else {
        std::filesystem::remove(org_dir / (dataset.id + ".ref"), ec);
    }

    const std::filesystem::path index_path = root_ / kIndexName;
    {
        std::ofstream out(index_path, std::ios::app);
        if (!out) throw StorageError("cannot append to " + index_path.string());
        out << dataset.id << '\t' << dataset.organization << '\t'
            << util::format_rfc3339(datestamp) << '\n';
        out.flush();
        if (!out) throw StorageError("short write to " + index_path.string());
    }
    fsync_path(index_path);

    index_[dataset.id] = IndexEntry{dataset.organization, datestamp};
    return dataset.id;
}

std::string CatalogStore::put(const StoredDataset& dataset, util::Instant now) {
    util::Instant stamp = now;
    const auto previous = index_.find(dataset.id);
    if (previous != index_.end()) stamp = std::max(stamp, previous->second.datestamp);
    return write_record(dataset, stamp);
}

std::string CatalogStore::put_as_of(const StoredDataset& dataset) {
    util::Instant stamp = dataset.datestamp;
    const auto previous = index_.find(dataset.id);
    if (previous != index_.end()) stamp = std::max(stamp, previous->second.datestamp);
    return write_record(dataset, stamp);
}

StoredDataset CatalogStore::load_record(const std::string& id, const IndexEntry& entry) const {
    const std::filesystem::path file = root_ / entry.organization / (id + ".rdf");
    std::ifstream in(file, std::ios::binary);
    if (!in) throw StorageError("missing record file " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();

    StoredDataset record;
    record.id = id;
    record.organization = entry.organization;
    record.datestamp = entry.datestamp;
    try {
        record.metadata = rdf::parse_rdfxml(buffer.str());
    } catch (const Error& e) {
        throw StorageError("record " + id + " does not parse: " + e.what());
    }

    const std::filesystem::path ref_file = root_ / entry.organization / (id + ".ref");
    std::ifstream ref(ref_file);
    if (ref) {
        std::string value;
        std::getline(ref, value);
        if (!value.empty()) record.payload_ref = value;
    }
    return record;
}

std::optional<StoredDataset> CatalogStore::get(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return load_record(id, it->second);
}

std::string CatalogStore::index_digest() const {
    std::uint64_t h = 14695981039346656037ULL;
    for (const auto& [id, entry] : index_) {
        h = util::fnv1a64(id, h);
        h = util::fnv1a64(entry.organization, h);
        h = util::fnv1a64(util::format_rfc3339(entry.datestamp), h);
    }
    return util::hex64(h) + "-" + std::to_string(index_.size());
}

StoreSnapshot CatalogStore::snapshot() const {
    StoreSnapshot snap;
    snap.id = index_digest();
    snap.records.reserve(index_.size());
    for (const auto& [id, entry] : index_) {
        snap.records.push_back(load_record(id, entry));
    }
    std::sort(snap.records.begin(), snap.records.end(),
              [](const StoredDataset& a, const StoredDataset& b) {
                  if (a.datestamp != b.datestamp) return a.datestamp < b.datestamp;
                  return a.id < b.id;
              });
    return snap;
}

std::vector<StoredDataset> list(const StoreSnapshot& snapshot, const ListFilter& filter) {
    std::vector<StoredDataset> out;
    for (const auto& record : snapshot.records) {
        if (filter.organization && record.organization != *filter.organization) continue;
        if (filter.from && record.datestamp < *filter.from) continue;
        if (filter.until && record.datestamp > *filter.until) continue;
        out.push_back(record);
    }
    return out;
}

} // namespace dcatforge::store
