#include "dcatforge/dcat/dataset.hpp"

#include "dcatforge/rdf/namespaces.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dcatforge::dcat {

namespace {

const std::string kDctTitle = ns::iri(ns::dct, "title");
const std::string kDctDescription = ns::iri(ns::dct, "description");
const std::string kDcatKeyword = ns::iri(ns::dcat, "keyword");
const std::string kDcatTheme = ns::iri(ns::dcat, "theme");
const std::string kDctSpatial = ns::iri(ns::dct, "spatial");
const std::string kDctTemporal = ns::iri(ns::dct, "temporal");
const std::string kDctIssued = ns::iri(ns::dct, "issued");
const std::string kDctModified = ns::iri(ns::dct, "modified");
const std::string kDctPublisher = ns::iri(ns::dct, "publisher");
const std::string kDcatContactPoint = ns::iri(ns::dcat, "contactPoint");
const std::string kDctAccessRights = ns::iri(ns::dct, "accessRights");
const std::string kOwlVersionInfo = ns::iri(ns::owl, "versionInfo");
const std::string kDcatLandingPage = ns::iri(ns::dcat, "landingPage");
const std::string kDcatDistribution = ns::iri(ns::dcat, "distribution");
const std::string kDcatAccessUrl = ns::iri(ns::dcat, "accessURL");
const std::string kDcatDownloadUrl = ns::iri(ns::dcat, "downloadURL");
const std::string kDctFormat = ns::iri(ns::dct, "format");
const std::string kDcatMediaType = ns::iri(ns::dcat, "mediaType");
const std::string kDctLicense = ns::iri(ns::dct, "license");
const std::string kDctRights = ns::iri(ns::dct, "rights");
const std::string kDcatByteSize = ns::iri(ns::dcat, "byteSize");

/// Collects the subgraph reachable from `start`, never expanding a subject
/// typed dcat:Dataset other than the root (so one dataset view in a catalog
/// document does not swallow its siblings).
std::vector<rdf::Triple> reachable_from(const rdf::Graph& g, const rdf::Term& root) {
    std::set<rdf::Term> dataset_nodes;
    for (const auto& s : g.subjects_of_type(ns::dcat_dataset_class)) dataset_nodes.insert(s);

    std::vector<rdf::Triple> out;
    std::set<rdf::Term> visited;
    std::vector<rdf::Term> frontier{root};
    while (!frontier.empty()) {
        const rdf::Term node = frontier.back();
        frontier.pop_back();
        if (!visited.insert(node).second) continue;
        if (node != root && dataset_nodes.contains(node)) continue;
        for (auto& t : g.with_subject(node)) {
            if (!t.object.is_literal()) frontier.push_back(t.object);
            out.push_back(std::move(t));
        }
    }
    return out;
}

struct SubgraphIndex {
    std::vector<rdf::Triple> triples;
    std::set<rdf::Triple> consumed;

    std::vector<rdf::Term> objects(const rdf::Term& subject, const std::string& predicate) const {
        std::vector<rdf::Term> out;
        for (const auto& t : triples) {
            if (t.subject == subject && t.predicate.value() == predicate) out.push_back(t.object);
        }
        return out;
    }

    void consume(const rdf::Term& subject, const std::string& predicate, const rdf::Term& object) {
        consumed.insert(rdf::Triple{subject, rdf::Term::iri(predicate), object});
    }

    std::vector<rdf::Triple> reachable(const rdf::Term& start) const {
        std::vector<rdf::Triple> out;
        std::set<rdf::Term> visited;
        std::vector<rdf::Term> frontier{start};
        while (!frontier.empty()) {
            const rdf::Term node = frontier.back();
            frontier.pop_back();
            if (!visited.insert(node).second) continue;
            for (const auto& t : triples) {
                if (t.subject != node) continue;
                if (!t.object.is_literal()) frontier.push_back(t.object);
                out.push_back(t);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// First object in term order, so extraction does not depend on triple
/// insertion order.
std::optional<rdf::Term> take_first(SubgraphIndex& index, const rdf::Term& subject,
                                    const std::string& predicate) {
    auto values = index.objects(subject, predicate);
    if (values.empty()) return std::nullopt;
    std::sort(values.begin(), values.end());
    index.consume(subject, predicate, values.front());
    return values.front();
}

std::optional<NodeRef> take_node_ref(SubgraphIndex& index, const rdf::Term& subject,
                                     const std::string& predicate) {
    const auto node = take_first(index, subject, predicate);
    if (!node) return std::nullopt;
    NodeRef ref{*node, {}};
    if (!node->is_literal()) {
        ref.properties = index.reachable(*node);
        for (const auto& t : ref.properties) index.consumed.insert(t);
    }
    return ref;
}

Distribution distribution_from(SubgraphIndex& index, const rdf::Term& node) {
    Distribution dist;
    dist.id = node;
    dist.access_url = take_first(index, node, kDcatAccessUrl);
    dist.download_url = take_first(index, node, kDcatDownloadUrl);
    dist.format = take_first(index, node, kDctFormat);
    dist.media_type = take_first(index, node, kDcatMediaType);
    dist.license = take_first(index, node, kDctLicense);
    dist.rights = take_first(index, node, kDctRights);
    dist.byte_size = take_first(index, node, kDcatByteSize);
    for (const auto& t : index.reachable(node)) {
        if (!index.consumed.contains(t)) {
            dist.residue.push_back(t);
            index.consumed.insert(t);
        }
    }
    std::sort(dist.residue.begin(), dist.residue.end());
    return dist;
}

void emit_node_ref(rdf::Graph& g, const rdf::Term& subject, const std::string& predicate,
                   const NodeRef& ref) {
    g.add(subject, predicate, ref.node);
    for (const auto& t : ref.properties) g.add(t);
}

void bind_standard_prefixes(rdf::Graph& g) {
    g.add_prefix("rdf", std::string(ns::rdf));
    g.add_prefix("dct", std::string(ns::dct));
    g.add_prefix("dcat", std::string(ns::dcat));
    g.add_prefix("foaf", std::string(ns::foaf));
    g.add_prefix("vcard", std::string(ns::vcard));
    g.add_prefix("skos", std::string(ns::skos));
    g.add_prefix("owl", std::string(ns::owl));
    g.add_prefix("xsd", std::string(ns::xsd));
}

} // namespace

std::optional<std::int64_t> Distribution::byte_size_value() const {
    if (!byte_size || !byte_size->is_literal()) return std::nullopt;
    const std::string& lexical = byte_size->value();
    if (lexical.empty()) return std::nullopt;
    std::int64_t value = 0;
    for (const char c : lexical) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        value = value * 10 + (c - '0');
        if (value < 0) return std::nullopt; // overflow
    }
    return value;
}

std::optional<std::string> Distribution::media_type_string() const {
    if (!media_type) return std::nullopt;
    if (media_type->is_literal()) return media_type->value();
    if (media_type->is_iri()) {
        // IANA registry IRIs end with .../<type>/<subtype>.
        const std::string& iri = media_type->value();
        const std::size_t last = iri.find_last_of('/');
        if (last == std::string::npos || last == 0) return std::nullopt;
        const std::size_t prev = iri.find_last_of('/', last - 1);
        if (prev == std::string::npos) return std::nullopt;
        return iri.substr(prev + 1);
    }
    return std::nullopt;
}

Dataset dataset_from_graph(const rdf::Graph& g, const rdf::Term& subject) {
    const rdf::Triple type_triple{subject, rdf::Term::iri(ns::rdf_type),
                                  rdf::Term::iri(ns::dcat_dataset_class)};
    if (!g.contains(type_triple)) {
        throw NotADataset("subject " + rdf::to_string(subject) +
                          " is not typed dcat:Dataset");
    }

    SubgraphIndex index;
    index.triples = reachable_from(g, subject);
    index.consumed.insert(type_triple);

    Dataset d;
    d.id = subject;
    d.title = take_first(index, subject, kDctTitle);
    d.description = take_first(index, subject, kDctDescription);
    d.spatial = take_first(index, subject, kDctSpatial);
    d.issued = take_first(index, subject, kDctIssued);
    d.modified = take_first(index, subject, kDctModified);
    d.access_rights = take_first(index, subject, kDctAccessRights);
    d.version_info = take_first(index, subject, kOwlVersionInfo);
    d.landing_page = take_first(index, subject, kDcatLandingPage);
    d.temporal = take_node_ref(index, subject, kDctTemporal);
    d.publisher = take_node_ref(index, subject, kDctPublisher);
    d.contact_point = take_node_ref(index, subject, kDcatContactPoint);

    for (const auto& value : index.objects(subject, kDcatKeyword)) {
        if (value.is_literal()) {
            d.keywords.push_back(value);
            index.consume(subject, kDcatKeyword, value);
        }
    }
    std::sort(d.keywords.begin(), d.keywords.end());

    for (const auto& value : index.objects(subject, kDcatTheme)) {
        if (value.is_iri()) {
            d.themes.push_back(value);
            index.consume(subject, kDcatTheme, value);
        }
    }
    std::sort(d.themes.begin(), d.themes.end());

    auto dist_nodes = index.objects(subject, kDcatDistribution);
    std::sort(dist_nodes.begin(), dist_nodes.end());
    for (const auto& node : dist_nodes) {
        if (node.is_literal()) continue; // malformed; lands in residue
        index.consume(subject, kDcatDistribution, node);
        d.distributions.push_back(distribution_from(index, node));
    }

    for (const auto& t : index.triples) {
        if (!index.consumed.contains(t)) d.residue.push_back(t);
    }
    std::sort(d.residue.begin(), d.residue.end());
    d.residue.erase(std::unique(d.residue.begin(), d.residue.end()), d.residue.end());
    return d;
}

rdf::Graph dataset_to_graph(const Dataset& d) {
    rdf::Graph g;
    bind_standard_prefixes(g);
    g.add(d.id, ns::rdf_type, rdf::Term::iri(ns::dcat_dataset_class));

    const auto emit = [&](const std::string& predicate, const std::optional<rdf::Term>& value) {
        if (value) g.add(d.id, predicate, *value);
    };
    emit(kDctTitle, d.title);
    emit(kDctDescription, d.description);
    emit(kDctSpatial, d.spatial);
    emit(kDctIssued, d.issued);
    emit(kDctModified, d.modified);
    emit(kDctAccessRights, d.access_rights);
    emit(kOwlVersionInfo, d.version_info);
    emit(kDcatLandingPage, d.landing_page);
    for (const auto& k : d.keywords) g.add(d.id, kDcatKeyword, k);
    for (const auto& t : d.themes) g.add(d.id, kDcatTheme, t);
    if (d.temporal) emit_node_ref(g, d.id, kDctTemporal, *d.temporal);
    if (d.publisher) emit_node_ref(g, d.id, kDctPublisher, *d.publisher);
    if (d.contact_point) emit_node_ref(g, d.id, kDcatContactPoint, *d.contact_point);

    for (const auto& dist : d.distributions) {
        g.add(d.id, kDcatDistribution, dist.id);
        const auto emit_dist = [&](const std::string& predicate,
                                   const std::optional<rdf::Term>& value) {
            if (value) g.add(dist.id, predicate, *value);
        };
        emit_dist(kDcatAccessUrl, dist.access_url);
        emit_dist(kDcatDownloadUrl, dist.download_url);
        emit_dist(kDctFormat, dist.format);
        emit_dist(kDcatMediaType, dist.media_type);
        emit_dist(kDctLicense, dist.license);
        emit_dist(kDctRights, dist.rights);
        emit_dist(kDcatByteSize, dist.byte_size);
        for (const auto& t : dist.residue) g.add(t);
    }
    for (const auto& t : d.residue) g.add(t);
    return g;
}

std::vector<rdf::Term> dataset_subjects(const rdf::Graph& g) {
    auto subjects = g.subjects_of_type(ns::dcat_dataset_class);
    std::sort(subjects.begin(), subjects.end());
    return subjects;
}

} // namespace dcatforge::dcat
