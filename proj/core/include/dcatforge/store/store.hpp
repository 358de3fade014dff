#pragma once

#include "dcatforge/error.hpp"
#include "dcatforge/rdf/graph.hpp"
#include "dcatforge/util/clock.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dcatforge::store {

class StorageError : public Error {
public:
    using Error::Error;
};

struct StoredDataset {
    std::string id;           // UUID text
    std::string organization; // lower-case slug, doubles as the OAI set
    rdf::Graph metadata;
    util::Instant datestamp{}; // last metadata write
    std::optional<std::string> payload_ref; // the data stays at its source

    friend bool operator==(const StoredDataset&, const StoredDataset&) = default;
};

/// An immutable, totally ordered view of the store at one point in time.
/// The id changes whenever the underlying store changes, which is how stale
/// resumption tokens are detected.
struct StoreSnapshot {
    std::string id;
    std::vector<StoredDataset> records; // ordered by (datestamp, id)
};

struct ListFilter {
    std::optional<std::string> organization;
    std::optional<util::Instant> from;  // inclusive
    std::optional<util::Instant> until; // inclusive
};

std::vector<StoredDataset> list(const StoreSnapshot& snapshot, const ListFilter& filter);

/// File-backed dataset store: one RDF/XML file per dataset under its
/// organization directory, plus an append-only index of
/// `id TAB organization TAB RFC3339-datestamp` lines (last line per id
/// wins). Writes go through write-then-rename, so a torn write is never
/// visible. Single writer, any number of snapshot readers.
class CatalogStore {
public:
    explicit CatalogStore(std::filesystem::path root);

    /// Upserts by id; the datestamp is max(now, previous datestamp).
    /// Durable before return. Returns the id.
    std::string put(const StoredDataset& dataset, util::Instant now);

    /// Upsert preserving the record's own datestamp (still monotonic per
    /// id); used when mirroring harvested records.
    std::string put_as_of(const StoredDataset& dataset);

    std::optional<StoredDataset> get(const std::string& id) const;
    StoreSnapshot snapshot() const;
    std::size_t size() const { return index_.size(); }
    const std::filesystem::path& root() const { return root_; }

    /// Cheap change detector: hashes the index without parsing any graph.
    std::string index_digest() const;

private:
    struct IndexEntry {
        std::string organization;
        util::Instant datestamp{};
    };

    std::string write_record(const StoredDataset& dataset, util::Instant datestamp);
    StoredDataset load_record(const std::string& id, const IndexEntry& entry) const;

    std::filesystem::path root_;
    std::map<std::string, IndexEntry> index_;
};

} // namespace dcatforge::store
