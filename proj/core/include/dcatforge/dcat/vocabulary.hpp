#pragma once

#include "dcatforge/error.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace dcatforge::dcat {

struct FileTypeFlags {
    bool open = false;
    bool machine_readable = false;

    friend bool operator==(const FileTypeFlags&, const FileTypeFlags&) = default;
};

/// A controlled vocabulary: a closed set of member strings (usually IRIs),
/// with open/machine-readable flags for file types. Membership is
/// case-sensitive exact match.
class Vocabulary {
public:
    Vocabulary(std::string id, std::map<std::string, FileTypeFlags> members);

    const std::string& id() const { return id_; }
    std::size_t size() const { return members_.size(); }
    bool contains(std::string_view candidate) const;
    /// Flags for a member; nullopt when the candidate is not a member.
    std::optional<FileTypeFlags> flags(std::string_view candidate) const;
    const std::map<std::string, FileTypeFlags>& members() const { return members_; }

    /// One member per line, tab-separated: the member string, then optional
    /// `open=0|1` and `machine=0|1` fields. '#' starts a comment line.
    static Vocabulary parse_tsv(std::string id, std::string_view text);
    static Vocabulary load_file(std::string id, const std::filesystem::path& file);

private:
    std::string id_;
    std::map<std::string, FileTypeFlags> members_;
};

/// The vocabularies the quality checks consult, keyed by the ids
/// "data-theme", "file-types", "media-types", "licenses", "access-rights".
class VocabularySet {
public:
    /// The seeded default set (EU data themes, common file types with
    /// open/machine flags, matching IANA media types, three licenses, the
    /// three access-right codes).
    static VocabularySet builtin();

    /// Loads `<id>.tsv` files from a directory, replacing builtins of the
    /// same id and adding new ones.
    static VocabularySet load_dir(const std::filesystem::path& dir);

    const Vocabulary& get(std::string_view id) const;
    bool has(std::string_view id) const { return vocabularies_.contains(std::string(id)); }
    void put(Vocabulary v);

private:
    std::map<std::string, Vocabulary> vocabularies_;
};

} // namespace dcatforge::dcat
