#include "dcatforge/rdf/term.hpp"

#include "dcatforge/util/ids.hpp"

namespace dcatforge::rdf {

Term Term::iri(std::string value) {
    if (!util::is_absolute_iri(value)) {
        throw Error("IRI is not absolute: '" + value + "'");
    }
    return Term(TermKind::Iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
    if (label.empty()) throw Error("blank node label may not be empty");
    return Term(TermKind::Blank, std::move(label), {}, {});
}

Term Term::literal(std::string lexical) {
    return Term(TermKind::Literal, std::move(lexical), {}, {});
}

Term Term::typed_literal(std::string lexical, std::string datatype_iri) {
    if (!util::is_absolute_iri(datatype_iri)) {
        throw Error("datatype IRI is not absolute: '" + datatype_iri + "'");
    }
    return Term(TermKind::Literal, std::move(lexical), std::move(datatype_iri), {});
}

Term Term::lang_literal(std::string lexical, std::string language_tag) {
    if (language_tag.empty()) throw Error("language tag may not be empty");
    return Term(TermKind::Literal, std::move(lexical), {}, std::move(language_tag));
}

std::string to_string(const Term& t) {
    switch (t.kind()) {
    case TermKind::Iri: return "<" + t.value() + ">";
    case TermKind::Blank: return "_:" + t.value();
    case TermKind::Literal: break;
    }
    std::string out = "\"" + t.value() + "\"";
    if (!t.datatype().empty()) out += "^^<" + t.datatype() + ">";
    if (!t.language().empty()) out += "@" + t.language();
    return out;
}

std::string to_string(const Triple& t) {
    return to_string(t.subject) + " " + to_string(t.predicate) + " " + to_string(t.object) + " .";
}

} // namespace dcatforge::rdf
