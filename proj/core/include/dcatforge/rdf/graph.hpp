#pragma once

#include "dcatforge/rdf/term.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dcatforge::rdf {

/// A set of triples plus a prefix table. Set semantics: adding a duplicate
/// triple is a no-op. Treat as an immutable value once populated; all
/// operations on a const Graph are thread-safe.
class Graph {
public:
    /// Validates the structural rules (subject is IRI or blank, predicate is
    /// an IRI) and inserts. Returns false if the triple was already present.
    bool add(Triple t);
    bool add(Term subject, std::string predicate_iri, Term object);

    /// Registers a namespace prefix. The IRI must be non-empty; an existing
    /// binding for the same prefix is kept.
    void add_prefix(std::string prefix, std::string iri);

    bool contains(const Triple& t) const { return triples_.contains(t); }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    const std::set<Triple>& triples() const { return triples_; }
    const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

    std::vector<Term> objects(const Term& subject, std::string_view predicate_iri) const;
    std::optional<Term> first_object(const Term& subject, std::string_view predicate_iri) const;
    std::vector<Term> subjects_of_type(std::string_view type_iri) const;
    std::vector<Triple> with_subject(const Term& subject) const;
    std::set<std::string> blank_labels() const;

    /// Triple-set equality; prefix tables are cosmetic and not compared.
    friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

private:
    std::set<Triple> triples_;
    std::map<std::string, std::string> prefixes_;
};

} // namespace dcatforge::rdf
