#pragma once

#include "dcatforge/dcat/dataset.hpp"
#include "dcatforge/dcat/vocabulary.hpp"

#include <string>
#include <vector>

namespace dcatforge::dcat {

class UnknownRuleSet : public Error {
public:
    using Error::Error;
};

struct ProfileViolation {
    rdf::Term subject;
    std::string rule_id;
    std::string message;

    friend bool operator==(const ProfileViolation&, const ProfileViolation&) = default;
};

/// A named, versioned selection of the fixed profile rules R1..R7.
class ProfileRuleSet {
public:
    /// Known names: "dcatap-2.1.0-min" and "dcatap-2.0.1-min" (both carry
    /// R1..R7). Throws UnknownRuleSet otherwise.
    static ProfileRuleSet named(std::string_view name);
    /// A custom selection; every id must be one of R1..R7.
    static ProfileRuleSet with_rules(std::string name, std::vector<std::string> rule_ids);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& rule_ids() const { return rule_ids_; }
    bool has_rule(std::string_view id) const;

private:
    ProfileRuleSet(std::string name, std::vector<std::string> rule_ids)
        : name_(std::move(name)), rule_ids_(std::move(rule_ids)) {}

    std::string name_;
    std::vector<std::string> rule_ids_;
};

/// Runs the selected rules and returns every violation; an empty list means
/// the dataset counts as DCAT-compliant for scoring.
///
/// R1 title present; R2 description present; R3 at least one distribution
/// with an access URL; R4 issued/modified, when present, are xsd:dateTime
/// literals; R5 accessRights, when present, is in the access-rights
/// vocabulary; R6 contactPoint, when present, is a structured node rather
/// than a bare IRI reference; R7 every theme IRI is in the data-theme
/// vocabulary.
std::vector<ProfileViolation> validate_profile(const Dataset& d, const ProfileRuleSet& rules,
                                               const VocabularySet& vocabularies);

} // namespace dcatforge::dcat
