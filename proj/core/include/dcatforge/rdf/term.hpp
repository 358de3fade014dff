#pragma once

#include "dcatforge/error.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace dcatforge::rdf {

enum class TermKind { Iri, Blank, Literal };

/// An RDF term: IRI, blank node or literal. Immutable once built; the
/// factories enforce the shape rules (absolute IRIs, at most one of
/// datatype/language on a literal).
class Term {
public:
    static Term iri(std::string value);
    static Term blank(std::string label);
    static Term literal(std::string lexical);
    static Term typed_literal(std::string lexical, std::string datatype_iri);
    static Term lang_literal(std::string lexical, std::string language_tag);

    TermKind kind() const { return kind_; }
    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_blank() const { return kind_ == TermKind::Blank; }
    bool is_literal() const { return kind_ == TermKind::Literal; }

    /// IRI string, blank label, or literal lexical form depending on kind.
    const std::string& value() const { return value_; }
    /// Datatype IRI of a typed literal, empty otherwise.
    const std::string& datatype() const { return datatype_; }
    /// Language tag of a language-tagged literal, empty otherwise.
    const std::string& language() const { return language_; }

    friend auto operator<=>(const Term&, const Term&) = default;

private:
    Term(TermKind kind, std::string value, std::string datatype, std::string language)
        : kind_(kind),
          value_(std::move(value)),
          datatype_(std::move(datatype)),
          language_(std::move(language)) {}

    TermKind kind_;
    std::string value_;
    std::string datatype_;
    std::string language_;
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Human-oriented rendering (N-Triples-ish), used in messages and tests.
std::string to_string(const Term& t);
std::string to_string(const Triple& t);

} // namespace dcatforge::rdf
