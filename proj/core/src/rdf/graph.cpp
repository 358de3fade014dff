#include "dcatforge/rdf/graph.hpp"

namespace dcatforge::rdf {

bool Graph::add(Triple t) {
    if (t.subject.is_literal()) {
        throw Error("triple subject may not be a literal: " + to_string(t));
    }
    if (!t.predicate.is_iri()) {
        throw Error("triple predicate must be an IRI: " + to_string(t));
    }
    return triples_.insert(std::move(t)).second;
}

bool Graph::add(Term subject, std::string predicate_iri, Term object) {
    return add(Triple{std::move(subject), Term::iri(std::move(predicate_iri)), std::move(object)});
}

void Graph::add_prefix(std::string prefix, std::string iri) {
    if (iri.empty()) throw Error("namespace IRI for prefix '" + prefix + "' is empty");
    prefixes_.try_emplace(std::move(prefix), std::move(iri));
}

std::vector<Term> Graph::objects(const Term& subject, std::string_view predicate_iri) const {
    std::vector<Term> out;
    for (const auto& t : triples_) {
        if (t.subject == subject && t.predicate.value() == predicate_iri) out.push_back(t.object);
    }
    return out;
}

std::optional<Term> Graph::first_object(const Term& subject,
                                        std::string_view predicate_iri) const {
    for (const auto& t : triples_) {
        if (t.subject == subject && t.predicate.value() == predicate_iri) return t.object;
    }
    return std::nullopt;
}

std::vector<Term> Graph::subjects_of_type(std::string_view type_iri) const {
    std::vector<Term> out;
    for (const auto& t : triples_) {
        if (t.predicate.value() == "http://www.w3.org/1999/02/22-rdf-syntax-ns#type" &&
            t.object.is_iri() && t.object.value() == type_iri) {
            out.push_back(t.subject);
        }
    }
    return out;
}

std::vector<Triple> Graph::with_subject(const Term& subject) const {
    std::vector<Triple> out;
    for (const auto& t : triples_) {
        if (t.subject == subject) out.push_back(t);
    }
    return out;
}

std::set<std::string> Graph::blank_labels() const {
    std::set<std::string> out;
    for (const auto& t : triples_) {
        if (t.subject.is_blank()) out.insert(t.subject.value());
        if (t.object.is_blank()) out.insert(t.object.value());
    }
    return out;
}

} // namespace dcatforge::rdf
