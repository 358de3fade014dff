#include "dcatforge/dcat/vocabulary.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace dcatforge::dcat {

namespace {

constexpr std::string_view kThemeBase = "http://publications.europa.eu/resource/authority/data-theme/";
constexpr std::string_view kFileTypeBase = "http://publications.europa.eu/resource/authority/file-type/";
constexpr std::string_view kAccessRightBase = "http://publications.europa.eu/resource/authority/access-right/";

std::vector<std::string> split_tabs(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == '\t') {
            fields.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

} // namespace

Vocabulary::Vocabulary(std::string id, std::map<std::string, FileTypeFlags> members)
    : id_(std::move(id)), members_(std::move(members)) {
    if (members_.empty()) throw Error("vocabulary '" + id_ + "' has no members");
}

bool Vocabulary::contains(std::string_view candidate) const {
    return members_.contains(std::string(candidate));
}

std::optional<FileTypeFlags> Vocabulary::flags(std::string_view candidate) const {
    const auto it = members_.find(std::string(candidate));
    if (it == members_.end()) return std::nullopt;
    return it->second;
}

Vocabulary Vocabulary::parse_tsv(std::string id, std::string_view text) {
    std::map<std::string, FileTypeFlags> members;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string_view line =
            text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        const auto fields = split_tabs(line);
        FileTypeFlags flags;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const std::string& f = fields[i];
            if (f == "open=0") flags.open = false;
            else if (f == "open=1") flags.open = true;
            else if (f == "machine=0") flags.machine_readable = false;
            else if (f == "machine=1") flags.machine_readable = true;
            else if (!f.empty())
                throw Error("vocabulary '" + id + "' line " + std::to_string(line_no) +
                            ": unknown field '" + f + "'");
        }
        if (fields.front().empty()) {
            throw Error("vocabulary '" + id + "' line " + std::to_string(line_no) +
                        ": empty member");
        }
        members[fields.front()] = flags;
    }
    return Vocabulary(std::move(id), std::move(members));
}

Vocabulary Vocabulary::load_file(std::string id, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open vocabulary file " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_tsv(std::move(id), buffer.str());
}

VocabularySet VocabularySet::builtin() {
    VocabularySet set;

    std::map<std::string, FileTypeFlags> themes;
    for (const char* code : {"AGRI", "ECON", "EDUC", "ENER", "ENVI", "GOVE", "HEAL", "INTR",
                             "JUST", "REGI", "SOCI", "TECH", "TRAN"}) {
        themes[std::string(kThemeBase) + code] = {};
    }
    set.put(Vocabulary("data-theme", std::move(themes)));

    std::map<std::string, FileTypeFlags> file_types;
    const auto file_type = [&](const char* code, bool open, bool machine) {
        file_types[std::string(kFileTypeBase) + code] = FileTypeFlags{open, machine};
    };
    file_type("CSV", true, true);
    file_type("JSON", true, true);
    file_type("XML", true, true);
    file_type("RDF_XML", true, true);
    file_type("TTL", true, true);
    file_type("GEOJSON", true, true);
    file_type("PDF", true, false);
    file_type("XLSX", false, true);
    set.put(Vocabulary("file-types", std::move(file_types)));

    std::map<std::string, FileTypeFlags> media_types;
    for (const char* mt : {"text/csv", "application/json", "application/xml",
                           "application/rdf+xml", "text/turtle", "application/geo+json",
                           "application/pdf",
                           "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet"}) {
        media_types[mt] = {};
    }
    set.put(Vocabulary("media-types", std::move(media_types)));

    std::map<std::string, FileTypeFlags> access_rights;
    for (const char* code : {"PUBLIC", "RESTRICTED", "NON_PUBLIC"}) {
        access_rights[std::string(kAccessRightBase) + code] = {};
    }
    set.put(Vocabulary("access-rights", std::move(access_rights)));

    std::map<std::string, FileTypeFlags> licenses;
    licenses["http://creativecommons.org/publicdomain/zero/1.0/"] = {};
    licenses["http://creativecommons.org/licenses/by/4.0/"] = {};
    licenses["http://opendatacommons.org/licenses/by/1.0/"] = {};
    set.put(Vocabulary("licenses", std::move(licenses)));

    return set;
}

VocabularySet VocabularySet::load_dir(const std::filesystem::path& dir) {
    VocabularySet set = builtin();
    if (!std::filesystem::is_directory(dir)) {
        throw Error("vocabulary directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".tsv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        set.put(Vocabulary::load_file(file.stem().string(), file));
    }
    return set;
}

const Vocabulary& VocabularySet::get(std::string_view id) const {
    const auto it = vocabularies_.find(std::string(id));
    if (it == vocabularies_.end()) throw Error("unknown vocabulary '" + std::string(id) + "'");
    return it->second;
}

void VocabularySet::put(Vocabulary v) {
    vocabularies_.insert_or_assign(v.id(), std::move(v));
}

} // namespace dcatforge::dcat
