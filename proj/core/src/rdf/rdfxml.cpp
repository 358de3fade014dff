#include "dcatforge/rdf/io.hpp"
#include "dcatforge/rdf/isomorphism.hpp"
#include "dcatforge/rdf/namespaces.hpp"
#include "dcatforge/util/ids.hpp"
#include "dcatforge/xml/xml.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace dcatforge::rdf {

namespace {

constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

bool is_ncname(std::string_view s) {
    if (s.empty()) return false;
    const auto alpha = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    if (!alpha(s[0])) return false;
    for (const char c : s.substr(1)) {
        if (!alpha(c) && !(c >= '0' && c <= '9') && c != '-' && c != '.') return false;
    }
    return true;
}

/// Splits an IRI into (namespace, local) at the last '#' or '/' such that the
/// local part is a valid NCName.
std::optional<std::pair<std::string, std::string>> split_qname(const std::string& iri) {
    const std::size_t pos = iri.find_last_of("#/");
    if (pos == std::string::npos || pos + 1 >= iri.size()) return std::nullopt;
    std::string local = iri.substr(pos + 1);
    if (!is_ncname(local)) return std::nullopt;
    return std::make_pair(iri.substr(0, pos + 1), std::move(local));
}

using Scope = std::map<std::string, std::string>; // prefix ("" = default) -> namespace IRI

struct ResolvedName {
    std::string ns;
    std::string local;
    std::string iri() const { return ns + local; }
};

class RdfXmlReader {
public:
    explicit RdfXmlReader(const xml::Node& root) : root_(root) {}

    Graph read() {
        collect_node_ids(root_);
        Scope scope;
        scope["xml"] = std::string(kXmlNs);
        apply_ns_declarations(root_, scope);
        const ResolvedName root_name = resolve_element(root_, scope);
        if (root_name.iri() != ns::iri(ns::rdf, "RDF")) {
            throw SyntaxError(root_.line, 1,
                              "expected rdf:RDF document element, found " + root_.name);
        }
        if (!root_.text_is_whitespace()) {
            throw SyntaxError(root_.line, 1, "character data inside rdf:RDF");
        }
        for (const auto& child : root_.children) {
            parse_node_element(child, scope);
        }
        return std::move(graph_);
    }

private:
    const xml::Node& root_;
    Graph graph_;
    std::set<std::string> used_blank_labels_;
    std::size_t next_blank_ = 0;

    void collect_node_ids(const xml::Node& node) {
        for (const auto& [k, v] : node.attributes) {
            if (k == "rdf:nodeID") used_blank_labels_.insert(v);
        }
        for (const auto& c : node.children) collect_node_ids(c);
    }

    std::string fresh_blank() {
        for (;;) {
            std::string label = "b" + std::to_string(next_blank_++);
            if (!used_blank_labels_.contains(label)) {
                used_blank_labels_.insert(label);
                return label;
            }
        }
    }

    void apply_ns_declarations(const xml::Node& node, Scope& scope) {
        for (const auto& [k, v] : node.attributes) {
            if (k == "xmlns") {
                if (v.empty()) throw SyntaxError(node.line, 1, "empty default namespace");
                scope[""] = v;
            } else if (k.starts_with("xmlns:")) {
                const std::string prefix = k.substr(6);
                if (v.empty())
                    throw SyntaxError(node.line, 1, "empty namespace for prefix " + prefix);
                scope[prefix] = v;
                graph_.add_prefix(prefix, v);
            }
        }
    }

    ResolvedName resolve_element(const xml::Node& node, const Scope& scope) const {
        const std::size_t colon = node.name.find(':');
        std::string prefix = colon == std::string::npos ? "" : node.name.substr(0, colon);
        std::string local = colon == std::string::npos ? node.name : node.name.substr(colon + 1);
        const auto it = scope.find(prefix);
        if (it == scope.end()) {
            throw SyntaxError(node.line, 1,
                              prefix.empty() ? "element '" + node.name + "' has no namespace"
                                             : "unbound namespace prefix '" + prefix + "'");
        }
        return ResolvedName{it->second, std::move(local)};
    }

    Term document_iri(const std::string& value, const xml::Node& node) const {
        if (!util::is_absolute_iri(value)) {
            throw UnsupportedFeature("relative IRI '" + value + "' near line " +
                                     std::to_string(node.line) +
                                     " (xml:base resolution is outside the supported subset)");
        }
        return Term::iri(value);
    }

    static bool is_ns_attr(const std::string& name) {
        return name == "xmlns" || name.starts_with("xmlns:");
    }

    void reject_unsupported_attrs(const xml::Node& node, std::initializer_list<std::string_view> allowed) const {
        for (const auto& [k, v] : node.attributes) {
            if (is_ns_attr(k)) continue;
            if (std::find(allowed.begin(), allowed.end(), k) != allowed.end()) continue;
            if (k == "rdf:ID" || k == "rdf:parseType" || k == "rdf:aboutEach" || k == "rdf:bagID") {
                throw UnsupportedFeature(k + " (line " + std::to_string(node.line) +
                                         ") is outside the supported RDF/XML subset");
            }
            throw UnsupportedFeature("attribute '" + k + "' on <" + node.name + "> (line " +
                                     std::to_string(node.line) +
                                     ") is outside the supported RDF/XML subset");
        }
    }

    /// Parses a node element (typed node or rdf:Description) and returns its
    /// subject term.
    Term parse_node_element(const xml::Node& node, Scope scope) {
        apply_ns_declarations(node, scope);
        const ResolvedName name = resolve_element(node, scope);
        if (name.iri() == ns::iri(ns::rdf, "li")) {
            throw UnsupportedFeature("rdf:li container items are outside the supported subset");
        }
        reject_unsupported_attrs(node, {"rdf:about", "rdf:nodeID"});

        const std::string* about = node.attribute("rdf:about");
        const std::string* node_id = node.attribute("rdf:nodeID");
        if (about != nullptr && node_id != nullptr) {
            throw SyntaxError(node.line, 1, "both rdf:about and rdf:nodeID on one node element");
        }
        Term subject = about != nullptr ? document_iri(*about, node)
                       : node_id != nullptr ? Term::blank(*node_id)
                                            : Term::blank(fresh_blank());

        if (name.iri() != ns::iri(ns::rdf, "Description")) {
            graph_.add(subject, ns::rdf_type, Term::iri(name.iri()));
        }
        if (!node.text_is_whitespace()) {
            throw SyntaxError(node.line, 1,
                              "character data inside node element <" + node.name + ">");
        }
        for (const auto& property : node.children) {
            parse_property_element(subject, property, scope);
        }
        return subject;
    }

    void parse_property_element(const Term& subject, const xml::Node& node, Scope scope) {
        apply_ns_declarations(node, scope);
        const ResolvedName name = resolve_element(node, scope);
        if (name.iri() == ns::iri(ns::rdf, "li")) {
            throw UnsupportedFeature("rdf:li container items are outside the supported subset");
        }
        if (node.attribute("rdf:parseType") != nullptr) {
            throw UnsupportedFeature("rdf:parseType (line " + std::to_string(node.line) +
                                     ") is outside the supported RDF/XML subset");
        }
        reject_unsupported_attrs(node, {"rdf:resource", "rdf:nodeID", "rdf:datatype", "xml:lang"});

        const Term predicate = Term::iri(name.iri());
        const std::string* resource = node.attribute("rdf:resource");
        const std::string* node_id = node.attribute("rdf:nodeID");
        const std::string* datatype = node.attribute("rdf:datatype");
        const std::string* lang = node.attribute("xml:lang");

        if (resource != nullptr || node_id != nullptr) {
            if (resource != nullptr && node_id != nullptr) {
                throw SyntaxError(node.line, 1, "both rdf:resource and rdf:nodeID on " + node.name);
            }
            if (datatype != nullptr || lang != nullptr || !node.children.empty() ||
                !node.text_is_whitespace()) {
                throw SyntaxError(node.line, 1,
                                  "reference property " + node.name + " must be empty");
            }
            Term object = resource != nullptr ? document_iri(*resource, node)
                                              : Term::blank(*node_id);
            graph_.add(Triple{subject, predicate, std::move(object)});
            return;
        }

        if (!node.children.empty()) {
            if (!node.text_is_whitespace()) {
                throw SyntaxError(node.line, 1, "mixed content in property " + node.name);
            }
            if (node.children.size() != 1) {
                throw SyntaxError(node.line, 1,
                                  "property " + node.name + " holds more than one node element");
            }
            if (datatype != nullptr || lang != nullptr) {
                throw SyntaxError(node.line, 1,
                                  "rdf:datatype/xml:lang on a node-valued property");
            }
            const Term object = parse_node_element(node.children.front(), scope);
            graph_.add(Triple{subject, predicate, object});
            return;
        }

        // Literal property.
        if (datatype != nullptr && lang != nullptr) {
            throw SyntaxError(node.line, 1, "both rdf:datatype and xml:lang on " + node.name);
        }
        Term object = datatype != nullptr ? Term::typed_literal(node.text, *datatype)
                      : lang != nullptr   ? Term::lang_literal(node.text, *lang)
                                          : Term::literal(node.text);
        graph_.add(Triple{subject, predicate, std::move(object)});
    }
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

class RdfXmlWriter {
public:
    explicit RdfXmlWriter(const Graph& g) : graph_(g), ranks_(canonical_blank_ranks(g)) {}

    std::string write() {
        singles_ = single_types();
        assign_prefixes();

        xml::Node root;
        root.name = qname(std::string(ns::rdf) + "RDF");
        for (const auto& [prefix, iri] : xmlns_declarations_) {
            root.attributes.emplace_back("xmlns:" + prefix, iri);
        }

        for (const auto& subject : ordered_subjects()) {
            root.children.push_back(node_element(subject));
        }
        return "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n" + xml::write(root, 2);
    }

private:
    const Graph& graph_;
    std::map<std::string, std::size_t> ranks_;
    std::map<std::string, std::string> prefix_of_ns_;                      // ns iri -> prefix
    std::vector<std::pair<std::string, std::string>> xmlns_declarations_;  // (prefix, ns iri)
    std::map<Term, std::string> singles_; // subject -> sole rdf:type expressible as the element name

    // Blank nodes order by canonical rank, after all IRIs.
    std::pair<int, std::string> subject_key(const Term& t) const {
        if (t.is_iri()) return {0, t.value()};
        char buf[24];
        std::snprintf(buf, sizeof(buf), "%020zu", ranks_.at(t.value()));
        return {1, buf};
    }

    std::vector<Term> ordered_subjects() const {
        std::set<Term> seen;
        std::vector<Term> subjects;
        for (const auto& t : graph_.triples()) {
            if (seen.insert(t.subject).second) subjects.push_back(t.subject);
        }
        std::sort(subjects.begin(), subjects.end(), [this](const Term& a, const Term& b) {
            return subject_key(a) < subject_key(b);
        });
        return subjects;
    }

    void assign_prefixes() {
        // Collect every namespace we must express as a QName.
        std::set<std::string> needed;
        needed.insert(std::string(ns::rdf));
        for (const auto& t : graph_.triples()) {
            const auto split = split_qname(t.predicate.value());
            if (!split) {
                throw UnsupportedFeature(
                    "predicate <" + t.predicate.value() +
                    "> cannot be written as an RDF/XML property element (no QName split)");
            }
            needed.insert(split->first);
        }
        for (const auto& [subject, type] : singles_) {
            const auto split = split_qname(type);
            if (split) needed.insert(split->first);
        }

        std::set<std::string> taken;
        // Prefer the graph's own declarations (sorted map => deterministic).
        for (const auto& [prefix, iri] : graph_.prefixes()) {
            if (needed.contains(iri) && !prefix_of_ns_.contains(iri) && !taken.contains(prefix) &&
                is_ncname(prefix)) {
                prefix_of_ns_[iri] = prefix;
                taken.insert(prefix);
            }
        }
        if (!prefix_of_ns_.contains(std::string(ns::rdf))) {
            std::string p = "rdf";
            for (int i = 0; taken.contains(p); ++i) p = "rdf" + std::to_string(i);
            prefix_of_ns_[std::string(ns::rdf)] = p;
            taken.insert(p);
        }
        std::size_t auto_index = 0;
        for (const auto& iri : needed) {
            if (prefix_of_ns_.contains(iri)) continue;
            std::string p;
            do {
                p = "ns" + std::to_string(auto_index++);
            } while (taken.contains(p));
            prefix_of_ns_[iri] = p;
            taken.insert(p);
        }
        for (const auto& [iri, prefix] : prefix_of_ns_) {
            xmlns_declarations_.emplace_back(prefix, iri);
        }
        std::sort(xmlns_declarations_.begin(), xmlns_declarations_.end());
    }

    /// Subjects with exactly one rdf:type IRI that splits into a QName.
    std::map<Term, std::string> single_types() const {
        std::map<Term, std::size_t> type_counts;
        std::map<Term, std::string> single;
        for (const auto& t : graph_.triples()) {
            if (t.predicate.value() == ns::rdf_type && t.object.is_iri()) {
                if (++type_counts[t.subject] == 1) {
                    single[t.subject] = t.object.value();
                } else {
                    single.erase(t.subject);
                }
            }
        }
        std::erase_if(single, [](const auto& kv) { return !split_qname(kv.second).has_value(); });
        return single;
    }

    std::string qname(const std::string& iri) const {
        const auto split = split_qname(iri);
        if (!split) throw UnsupportedFeature("IRI <" + iri + "> has no QName form");
        const auto it = prefix_of_ns_.find(split->first);
        if (it == prefix_of_ns_.end())
            throw UnsupportedFeature("no prefix for namespace <" + split->first + ">");
        return it->second + ":" + split->second;
    }

    xml::Node node_element(const Term& subject) {
        const auto single_it = singles_.find(subject);

        xml::Node element;
        element.name = single_it != singles_.end() ? qname(single_it->second)
                                                   : qname(std::string(ns::rdf) + "Description");
        if (subject.is_iri()) {
            element.attributes.emplace_back(qname(std::string(ns::rdf) + "about"),
                                            subject.value());
        } else {
            element.attributes.emplace_back(qname(std::string(ns::rdf) + "nodeID"),
                                            subject.value());
        }

        std::vector<Triple> triples = graph_.with_subject(subject);
        std::sort(triples.begin(), triples.end(), [this](const Triple& a, const Triple& b) {
            if (a.predicate != b.predicate) return a.predicate < b.predicate;
            const bool ab = a.object.is_blank(), bb = b.object.is_blank();
            if (ab && bb) return ranks_.at(a.object.value()) < ranks_.at(b.object.value());
            return a.object < b.object;
        });
        for (const auto& t : triples) {
            if (single_it != singles_.end() && t.predicate.value() == ns::rdf_type &&
                t.object.is_iri() && t.object.value() == single_it->second) {
                continue; // expressed by the element name
            }
            element.children.push_back(property_element(t));
        }
        return element;
    }

    xml::Node property_element(const Triple& t) {
        xml::Node p;
        p.name = qname(t.predicate.value());
        switch (t.object.kind()) {
        case TermKind::Iri:
            p.attributes.emplace_back(qname(std::string(ns::rdf) + "resource"), t.object.value());
            break;
        case TermKind::Blank:
            p.attributes.emplace_back(qname(std::string(ns::rdf) + "nodeID"), t.object.value());
            break;
        case TermKind::Literal:
            if (!t.object.datatype().empty()) {
                p.attributes.emplace_back(qname(std::string(ns::rdf) + "datatype"),
                                          t.object.datatype());
            } else if (!t.object.language().empty()) {
                p.attributes.emplace_back("xml:lang", t.object.language());
            }
            p.text = t.object.value();
            break;
        }
        return p;
    }
};

} // namespace

Graph parse_rdfxml(std::string_view document) {
    try {
        const xml::Node root = xml::parse_document(document);
        return RdfXmlReader(root).read();
    } catch (const xml::ParseError& e) {
        throw SyntaxError(e.line(), e.column(), e.what());
    }
}

std::string serialize_rdfxml(const Graph& g) {
    return RdfXmlWriter(g).write();
}

} // namespace dcatforge::rdf
