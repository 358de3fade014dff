#pragma once

#include "dcatforge/error.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dcatforge::mqa {

enum class Dimension { Findability, Accessibility, Interoperability, Reusability, Contextuality };

inline constexpr std::array<Dimension, 5> kDimensions = {
    Dimension::Findability, Dimension::Accessibility, Dimension::Interoperability,
    Dimension::Reusability, Dimension::Contextuality};

std::string_view dimension_name(Dimension d);
Dimension parse_dimension(std::string_view name); // throws Error on unknown names

struct Indicator {
    std::string id;
    Dimension dimension;
    int weight = 0; // points
    std::string check;
};

/// The weighted indicator table. Data-driven: the default 405-point rubric is
/// built in, and alternatives load from a TSV file.
class Rubric {
public:
    Rubric(std::string id, std::vector<Indicator> indicators);

    /// The default rubric: 405 points across Findability 100, Accessibility
    /// 100, Interoperability 110, Reusability 75, Contextuality 20.
    static Rubric mqa_default();

    /// TSV rows: indicator-id TAB dimension TAB weight TAB check-id.
    static Rubric load_tsv(std::string id, std::string_view text);
    static Rubric load_file(const std::filesystem::path& file);

    const std::string& id() const { return id_; }
    const std::vector<Indicator>& indicators() const { return indicators_; }
    int total_weight() const;
    int dimension_weight(Dimension d) const;

private:
    std::string id_;
    std::vector<Indicator> indicators_;
};

inline constexpr std::string_view kDefaultRubricId = "mqa-405";

} // namespace dcatforge::mqa
