#include "dcatforge/mqa/rubric.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dcatforge::mqa {

std::string_view dimension_name(Dimension d) {
    switch (d) {
    case Dimension::Findability: return "Findability";
    case Dimension::Accessibility: return "Accessibility";
    case Dimension::Interoperability: return "Interoperability";
    case Dimension::Reusability: return "Reusability";
    case Dimension::Contextuality: return "Contextuality";
    }
    return "?";
}

Dimension parse_dimension(std::string_view name) {
    for (const Dimension d : kDimensions) {
        if (dimension_name(d) == name) return d;
    }
    throw Error("unknown dimension '" + std::string(name) + "'");
}

Rubric::Rubric(std::string id, std::vector<Indicator> indicators)
    : id_(std::move(id)), indicators_(std::move(indicators)) {
    std::set<std::string> seen;
    for (const auto& ind : indicators_) {
        if (ind.weight < 0) throw Error("rubric '" + id_ + "': negative weight on " + ind.id);
        if (!seen.insert(ind.id).second) {
            throw Error("rubric '" + id_ + "': duplicate indicator id " + ind.id);
        }
    }
    if (total_weight() <= 0) throw Error("rubric '" + id_ + "' has no points");
}

Rubric Rubric::mqa_default() {
    using D = Dimension;
    std::vector<Indicator> indicators = {
        {"keyword-usage", D::Findability, 30, "keyword-usage"},
        {"theme-usage", D::Findability, 20, "theme-usage"},
        {"geo-info", D::Findability, 20, "geo-info"},
        {"temporal-info", D::Findability, 30, "temporal-info"},
        {"access-url", D::Accessibility, 50, "access-url"},
        {"download-url", D::Accessibility, 50, "download-url"},
        {"format", D::Interoperability, 25, "format"},
        {"media-type", D::Interoperability, 15, "media-type"},
        {"open-format", D::Interoperability, 20, "open-format"},
        {"machine-readable", D::Interoperability, 20, "machine-readable"},
        {"dcat-compliant", D::Interoperability, 30, "dcat-compliant"},
        {"license", D::Reusability, 30, "license"},
        {"public-access", D::Reusability, 15, "public-access"},
        {"contact-point", D::Reusability, 20, "contact-point"},
        {"publisher-info", D::Reusability, 10, "publisher-info"},
        {"rights", D::Contextuality, 5, "rights"},
        {"size", D::Contextuality, 5, "size"},
        {"date-info", D::Contextuality, 10, "date-info"},
    };
    return Rubric(std::string(kDefaultRubricId), std::move(indicators));
}

Rubric Rubric::load_tsv(std::string id, std::string_view text) {
    std::vector<Indicator> indicators;
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

        std::vector<std::string> fields;
        std::size_t field_start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '\t') {
                fields.emplace_back(line.substr(field_start, i - field_start));
                field_start = i + 1;
            }
        }
        if (fields.size() != 4) {
            throw Error("rubric '" + id + "' line " + std::to_string(line_no) +
                        ": expected 4 tab-separated fields");
        }
        int weight = 0;
        try {
            weight = std::stoi(fields[2]);
        } catch (...) {
            throw Error("rubric '" + id + "' line " + std::to_string(line_no) +
                        ": bad weight '" + fields[2] + "'");
        }
        indicators.push_back(Indicator{fields[0], parse_dimension(fields[1]), weight, fields[3]});
    }
    return Rubric(std::move(id), std::move(indicators));
}

Rubric Rubric::load_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open rubric file " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_tsv(file.stem().string(), buffer.str());
}

int Rubric::total_weight() const {
    int total = 0;
    for (const auto& ind : indicators_) total += ind.weight;
    return total;
}

int Rubric::dimension_weight(Dimension d) const {
    int total = 0;
    for (const auto& ind : indicators_) {
        if (ind.dimension == d) total += ind.weight;
    }
    return total;
}

} // namespace dcatforge::mqa
