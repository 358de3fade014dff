#include "dcatforge/mqa/evaluate.hpp"

#include <algorithm>

namespace dcatforge::mqa {

namespace {

/// Per-distribution pass/fail with an explanation for each failure.
struct DistributionCheck {
    std::size_t passing = 0;
    std::size_t total = 0;
    std::vector<std::string> messages;
};

std::string dist_label(const dcat::Distribution& dist) {
    return rdf::to_string(dist.id);
}

const ProbeOutcome& probe_for(const ProbeResultMap& probes, const rdf::Term& url_term) {
    const auto it = probes.find(url_term.value());
    if (it == probes.end()) {
        throw MissingProbe("no probe result for URL " + url_term.value());
    }
    return it->second;
}

/// Shared logic for access-url / download-url: the URL must be present and
/// its probe must have answered in the 200 or 300 range.
DistributionCheck check_url_accessibility(const dcat::Dataset& d, const ProbeResultMap& probes,
                                          std::optional<rdf::Term> dcat::Distribution::*member,
                                          const char* property_name) {
    DistributionCheck result;
    result.total = d.distributions.size();
    for (const auto& dist : d.distributions) {
        const auto& url = dist.*member;
        if (!url) {
            result.messages.push_back(dist_label(dist) + ": no " + property_name);
            continue;
        }
        if (!url->is_iri()) {
            result.messages.push_back(dist_label(dist) + ": " + property_name +
                                      " is not an IRI");
            continue;
        }
        if (!probe_accessible(probe_for(probes, *url))) {
            result.messages.emplace_back(kProbeFailureMessage);
            continue;
        }
        ++result.passing;
    }
    return result;
}

DistributionCheck check_each_distribution(
    const dcat::Dataset& d,
    const std::function<std::optional<std::string>(const dcat::Distribution&)>& failure) {
    DistributionCheck result;
    result.total = d.distributions.size();
    for (const auto& dist : d.distributions) {
        if (auto message = failure(dist)) {
            result.messages.push_back(*message);
        } else {
            ++result.passing;
        }
    }
    return result;
}

} // namespace

int prorate(int weight, std::size_t passing, std::size_t total) {
    if (total == 0) return 0;
    // round half up in exact integer arithmetic
    return static_cast<int>((2 * static_cast<long long>(weight) * static_cast<long long>(passing) +
                             static_cast<long long>(total)) /
                            (2 * static_cast<long long>(total)));
}

const IndicatorResult* QualityReport::indicator(std::string_view id) const {
    for (const auto& r : indicators) {
        if (r.indicator_id == id) return &r;
    }
    return nullptr;
}

int QualityReport::dimension_points(Dimension d) const {
    for (const auto& score : dimensions) {
        if (score.dimension == d) return score.points;
    }
    return 0;
}

IndicatorResult evaluate_indicator(const Indicator& indicator, const dcat::Dataset& d,
                                   const ProbeResultMap& probes,
                                   const dcat::ProfileRuleSet& rules,
                                   const dcat::VocabularySet& vocabularies) {
    IndicatorResult result;
    result.indicator_id = indicator.id;
    result.dimension = indicator.dimension;
    result.max = indicator.weight;

    bool pass = false;                          // simple checks
    std::optional<DistributionCheck> prorated;  // distribution-level checks
    const std::string& check = indicator.check;

    if (check == "keyword-usage") {
        pass = !d.keywords.empty();
        if (!pass) result.messages.emplace_back("no dcat:keyword");
    } else if (check == "theme-usage") {
        const auto& vocab = vocabularies.get("data-theme");
        pass = std::any_of(d.themes.begin(), d.themes.end(),
                           [&](const rdf::Term& t) { return vocab.contains(t.value()); });
        if (!pass) result.messages.emplace_back("no dcat:theme from the data-theme vocabulary");
    } else if (check == "geo-info") {
        pass = d.spatial.has_value();
        if (!pass) result.messages.emplace_back("no dct:spatial coverage");
    } else if (check == "temporal-info") {
        pass = d.temporal.has_value();
        if (!pass) result.messages.emplace_back("no dct:temporal coverage");
    } else if (check == "access-url") {
        prorated = check_url_accessibility(d, probes, &dcat::Distribution::access_url,
                                           "dcat:accessURL");
    } else if (check == "download-url") {
        prorated = check_url_accessibility(d, probes, &dcat::Distribution::download_url,
                                           "dcat:downloadURL");
    } else if (check == "format") {
        const auto& vocab = vocabularies.get("file-types");
        prorated = check_each_distribution(d, [&](const dcat::Distribution& dist)
                                                  -> std::optional<std::string> {
            if (!dist.format) return dist_label(dist) + ": no dct:format";
            if (!vocab.contains(dist.format->value())) {
                return dist_label(dist) + ": dct:format not in the file-types vocabulary";
            }
            return std::nullopt;
        });
    } else if (check == "media-type") {
        const auto& vocab = vocabularies.get("media-types");
        prorated = check_each_distribution(d, [&](const dcat::Distribution& dist)
                                                  -> std::optional<std::string> {
            const auto mt = dist.media_type_string();
            if (!mt) return dist_label(dist) + ": no dcat:mediaType";
            if (!vocab.contains(*mt)) {
                return dist_label(dist) + ": dcat:mediaType not in the media-types vocabulary";
            }
            return std::nullopt;
        });
    } else if (check == "open-format" || check == "machine-readable") {
        const auto& vocab = vocabularies.get("file-types");
        const bool want_open = check == "open-format";
        prorated = check_each_distribution(d, [&](const dcat::Distribution& dist)
                                                  -> std::optional<std::string> {
            const auto flags = dist.format ? vocab.flags(dist.format->value()) : std::nullopt;
            if (!flags) return dist_label(dist) + ": dct:format not in the file-types vocabulary";
            if (want_open && !flags->open) {
                return dist_label(dist) + ": format is not an open format";
            }
            if (!want_open && !flags->machine_readable) {
                return dist_label(dist) + ": format is not machine-readable";
            }
            return std::nullopt;
        });
    } else if (check == "dcat-compliant") {
        const auto violations = dcat::validate_profile(d, rules, vocabularies);
        pass = violations.empty();
        for (const auto& v : violations) {
            result.messages.push_back("profile rule " + v.rule_id + ": " + v.message);
        }
    } else if (check == "license") {
        const auto& vocab = vocabularies.get("licenses");
        pass = std::any_of(d.distributions.begin(), d.distributions.end(),
                           [&](const dcat::Distribution& dist) {
                               return dist.license && vocab.contains(dist.license->value());
                           });
        if (!pass) {
            result.messages.emplace_back(
                "no distribution carries a dct:license from the licenses vocabulary");
        }
    } else if (check == "public-access") {
        pass = d.access_rights && d.access_rights->is_iri() &&
               vocabularies.get("access-rights").contains(d.access_rights->value());
        if (!pass) {
            result.messages.emplace_back(
                "dct:accessRights missing or not in the access-rights vocabulary");
        }
    } else if (check == "contact-point") {
        pass = d.contact_point.has_value();
        if (!pass) result.messages.emplace_back("no dcat:contactPoint");
    } else if (check == "publisher-info") {
        pass = d.publisher.has_value();
        if (!pass) result.messages.emplace_back("no dct:publisher");
    } else if (check == "rights") {
        prorated = check_each_distribution(d, [&](const dcat::Distribution& dist)
                                                  -> std::optional<std::string> {
            if (!dist.rights) return dist_label(dist) + ": no dct:rights";
            return std::nullopt;
        });
    } else if (check == "size") {
        prorated = check_each_distribution(d, [&](const dcat::Distribution& dist)
                                                  -> std::optional<std::string> {
            if (!dist.byte_size) return dist_label(dist) + ": no dcat:byteSize";
            return std::nullopt;
        });
    } else if (check == "date-info") {
        pass = d.issued.has_value() && d.modified.has_value();
        if (!pass) result.messages.emplace_back("dct:issued and/or dct:modified missing");
    } else {
        throw UnknownCheck("indicator '" + indicator.id + "' references unknown check '" + check +
                           "'");
    }

    if (prorated) {
        if (prorated->total == 0) {
            result.fraction = 0.0;
            result.messages.emplace_back("no distributions");
        } else {
            result.fraction =
                static_cast<double>(prorated->passing) / static_cast<double>(prorated->total);
            result.messages.insert(result.messages.end(), prorated->messages.begin(),
                                   prorated->messages.end());
        }
        result.awarded = prorate(indicator.weight, prorated->passing, prorated->total);
    } else {
        result.fraction = pass ? 1.0 : 0.0;
        result.awarded = pass ? indicator.weight : 0;
    }
    return result;
}

QualityReport evaluate(const dcat::Dataset& d, const ProbeResultMap& probes, const Rubric& rubric,
                       const dcat::ProfileRuleSet& rules, const dcat::VocabularySet& vocabularies,
                       std::string evaluated_at) {
    QualityReport report;
    report.dataset_id = d.id.value();
    report.rubric_id = rubric.id();
    report.evaluated_at = std::move(evaluated_at);
    report.max_total = rubric.total_weight();

    std::map<Dimension, DimensionScore> dims;
    for (const Dimension dim : kDimensions) {
        const int max = rubric.dimension_weight(dim);
        if (max > 0) dims[dim] = DimensionScore{dim, 0, max};
    }

    for (const auto& indicator : rubric.indicators()) {
        IndicatorResult result = evaluate_indicator(indicator, d, probes, rules, vocabularies);
        report.total += result.awarded;
        dims[indicator.dimension].points += result.awarded;
        dims[indicator.dimension].max = rubric.dimension_weight(indicator.dimension);
        dims[indicator.dimension].dimension = indicator.dimension;
        report.indicators.push_back(std::move(result));
    }
    for (const Dimension dim : kDimensions) {
        const auto it = dims.find(dim);
        if (it != dims.end()) report.dimensions.push_back(it->second);
    }
    return report;
}

} // namespace dcatforge::mqa
