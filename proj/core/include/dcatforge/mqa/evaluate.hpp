#pragma once

#include "dcatforge/dcat/dataset.hpp"
#include "dcatforge/dcat/profile.hpp"
#include "dcatforge/dcat/vocabulary.hpp"
#include "dcatforge/mqa/probe_result.hpp"
#include "dcatforge/mqa/rubric.hpp"

#include <string>
#include <vector>

namespace dcatforge::mqa {

/// A URL under test has no entry in the probe map.
class MissingProbe : public Error {
public:
    using Error::Error;
};

/// An indicator references a check id this engine does not implement.
class UnknownCheck : public Error {
public:
    using Error::Error;
};

/// The verbatim report message for an unreachable distribution URL.
inline constexpr std::string_view kProbeFailureMessage =
    "Responded status code of the HTTP HEAD request is not in the 200 or 300 range. No weight "
    "assigned";

struct IndicatorResult {
    std::string indicator_id;
    Dimension dimension = Dimension::Findability;
    int awarded = 0;
    int max = 0;
    double fraction = 0.0; // passing share in [0,1]; awarded == round(max * fraction)
    std::vector<std::string> messages;

    bool passed() const { return max > 0 && awarded == max; }

    friend bool operator==(const IndicatorResult&, const IndicatorResult&) = default;
};

struct DimensionScore {
    Dimension dimension = Dimension::Findability;
    int points = 0;
    int max = 0;

    friend bool operator==(const DimensionScore&, const DimensionScore&) = default;
};

struct QualityReport {
    std::string dataset_id;
    std::string rubric_id;
    std::string evaluated_at; // RFC 3339; injected, never sampled here
    std::vector<IndicatorResult> indicators;
    std::vector<DimensionScore> dimensions;
    int total = 0;
    int max_total = 0;

    const IndicatorResult* indicator(std::string_view id) const;
    int dimension_points(Dimension d) const;

    friend bool operator==(const QualityReport&, const QualityReport&) = default;
};

/// Evaluates one indicator. Distribution-level checks pass fractionally:
/// fraction = passing distributions / total distributions, awarded = weight x
/// fraction rounded half up.
IndicatorResult evaluate_indicator(const Indicator& indicator, const dcat::Dataset& d,
                                   const ProbeResultMap& probes,
                                   const dcat::ProfileRuleSet& rules,
                                   const dcat::VocabularySet& vocabularies);

/// Runs the whole rubric. Pure: identical inputs yield identical reports
/// (the evaluation timestamp is a parameter).
QualityReport evaluate(const dcat::Dataset& d, const ProbeResultMap& probes, const Rubric& rubric,
                       const dcat::ProfileRuleSet& rules, const dcat::VocabularySet& vocabularies,
                       std::string evaluated_at);

/// round(weight * passing / total), half up; 0 when total == 0.
int prorate(int weight, std::size_t passing, std::size_t total);

} // namespace dcatforge::mqa
