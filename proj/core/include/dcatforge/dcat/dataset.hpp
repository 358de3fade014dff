#pragma once

#include "dcatforge/error.hpp"
#include "dcatforge/rdf/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dcatforge::dcat {

/// The subject lacks an rdf:type dcat:Dataset assertion.
class NotADataset : public Error {
public:
    using Error::Error;
};

/// A node-valued property: the object term plus the triples reachable from
/// it. A bare IRI reference has an empty property list.
struct NodeRef {
    rdf::Term node;
    std::vector<rdf::Triple> properties;

    bool structured() const { return !properties.empty(); }
    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct Distribution {
    rdf::Term id; // IRI or blank node
    std::optional<rdf::Term> access_url;
    std::optional<rdf::Term> download_url;
    std::optional<rdf::Term> format;
    std::optional<rdf::Term> media_type;
    std::optional<rdf::Term> license;
    std::optional<rdf::Term> rights;
    std::optional<rdf::Term> byte_size;
    std::vector<rdf::Triple> residue; // everything else in the distribution node, incl. rdf:type

    /// Numeric view of byte_size; nullopt when absent or not a non-negative
    /// integer lexical form.
    std::optional<std::int64_t> byte_size_value() const;
    /// Media type string regardless of literal/IRI representation (an IRI's
    /// trailing "type/subtype" segment counts).
    std::optional<std::string> media_type_string() const;

    friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// Typed view over one dcat:Dataset subject. Lossless: triples the view does
/// not recognize are preserved in `residue` (dataset-level) or in each
/// distribution's residue. Lists are kept sorted so views compare by value.
struct Dataset {
    rdf::Term id = rdf::Term::iri("urn:dcatforge:unset");
    std::optional<rdf::Term> title;
    std::optional<rdf::Term> description;
    std::vector<rdf::Term> keywords; // literals
    std::vector<rdf::Term> themes;   // IRIs
    std::optional<rdf::Term> spatial;
    std::optional<NodeRef> temporal;
    std::optional<rdf::Term> issued;
    std::optional<rdf::Term> modified;
    std::optional<NodeRef> publisher;
    std::optional<NodeRef> contact_point;
    std::optional<rdf::Term> access_rights;
    std::optional<rdf::Term> version_info;
    std::optional<rdf::Term> landing_page;
    std::vector<Distribution> distributions;
    std::vector<rdf::Triple> residue;

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Builds the typed view of `subject` from g. Follows blank nodes and
/// non-dataset IRI nodes reachable from the subject; sibling datasets are not
/// swallowed. Throws NotADataset when the type triple is missing.
Dataset dataset_from_graph(const rdf::Graph& g, const rdf::Term& subject);

/// Emits the type triple, one triple per populated field (plus node
/// subtrees), and the residue. Standard DCAT prefixes are bound on the
/// result.
rdf::Graph dataset_to_graph(const Dataset& d);

/// All subjects typed dcat:Dataset, in term order.
std::vector<rdf::Term> dataset_subjects(const rdf::Graph& g);

} // namespace dcatforge::dcat
