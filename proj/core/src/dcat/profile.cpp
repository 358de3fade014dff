#include "dcatforge/dcat/profile.hpp"

#include "dcatforge/rdf/namespaces.hpp"
#include "dcatforge/util/time.hpp"

#include <algorithm>
#include <array>

namespace dcatforge::dcat {

namespace {

constexpr std::array<std::string_view, 7> kKnownRules = {"R1", "R2", "R3", "R4",
                                                         "R5", "R6", "R7"};

bool datetime_literal_ok(const rdf::Term& t) {
    return t.is_literal() && t.datatype() == ns::xsd_datetime &&
           util::is_xsd_datetime(t.value());
}

} // namespace

ProfileRuleSet ProfileRuleSet::named(std::string_view name) {
    if (name == "dcatap-2.1.0-min" || name == "dcatap-2.0.1-min") {
        std::vector<std::string> ids(kKnownRules.begin(), kKnownRules.end());
        return ProfileRuleSet(std::string(name), std::move(ids));
    }
    throw UnknownRuleSet("unknown profile rule set '" + std::string(name) + "'");
}

ProfileRuleSet ProfileRuleSet::with_rules(std::string name, std::vector<std::string> rule_ids) {
    for (const auto& id : rule_ids) {
        if (std::find(kKnownRules.begin(), kKnownRules.end(), id) == kKnownRules.end()) {
            throw UnknownRuleSet("rule set '" + name + "' references undefined rule '" + id + "'");
        }
    }
    return ProfileRuleSet(std::move(name), std::move(rule_ids));
}

bool ProfileRuleSet::has_rule(std::string_view id) const {
    return std::find(rule_ids_.begin(), rule_ids_.end(), id) != rule_ids_.end();
}

std::vector<ProfileViolation> validate_profile(const Dataset& d, const ProfileRuleSet& rules,
                                               const VocabularySet& vocabularies) {
    std::vector<ProfileViolation> violations;
    const auto violate = [&](const char* rule, std::string message) {
        violations.push_back(ProfileViolation{d.id, rule, std::move(message)});
    };

    if (rules.has_rule("R1") && !d.title) {
        violate("R1", "dct:title is missing");
    }
    if (rules.has_rule("R2") && !d.description) {
        violate("R2", "dct:description is missing");
    }
    if (rules.has_rule("R3")) {
        const bool any = std::any_of(d.distributions.begin(), d.distributions.end(),
                                     [](const Distribution& dist) {
                                         return dist.access_url.has_value();
                                     });
        if (!any) violate("R3", "no distribution with a dcat:accessURL");
    }
    if (rules.has_rule("R4")) {
        if (d.issued && !datetime_literal_ok(*d.issued)) {
            violate("R4", "dct:issued is not an xsd:dateTime literal");
        }
        if (d.modified && !datetime_literal_ok(*d.modified)) {
            violate("R4", "dct:modified is not an xsd:dateTime literal");
        }
    }
    if (rules.has_rule("R5") && d.access_rights) {
        const bool ok = d.access_rights->is_iri() &&
                        vocabularies.get("access-rights").contains(d.access_rights->value());
        if (!ok) {
            violate("R5", "dct:accessRights " + rdf::to_string(*d.access_rights) +
                              " is not in the access-rights vocabulary");
        }
    }
    if (rules.has_rule("R6") && d.contact_point && !d.contact_point->structured()) {
        violate("R6", "dcat:contactPoint " + rdf::to_string(d.contact_point->node) +
                          " is a bare IRI reference without any property");
    }
    if (rules.has_rule("R7")) {
        const Vocabulary& themes = vocabularies.get("data-theme");
        std::string bad;
        for (const auto& theme : d.themes) {
            if (!themes.contains(theme.value())) {
                if (!bad.empty()) bad += ", ";
                bad += theme.value();
            }
        }
        if (!bad.empty()) violate("R7", "dcat:theme not in the data-theme vocabulary: " + bad);
    }
    return violations;
}

} // namespace dcatforge::dcat
