#include "dcatforge/rdf/io.hpp"

namespace dcatforge::rdf {

std::string_view format_name(Format f) {
    switch (f) {
    case Format::RdfXml: return "rdf-xml";
    case Format::Turtle: return "turtle";
    }
    return "unknown";
}

Graph parse(std::string_view document, Format format) {
    switch (format) {
    case Format::RdfXml: return parse_rdfxml(document);
    case Format::Turtle: return parse_turtle(document);
    }
    throw Error("unknown RDF format");
}

std::string serialize(const Graph& g, Format format) {
    switch (format) {
    case Format::RdfXml: return serialize_rdfxml(g);
    case Format::Turtle: return serialize_turtle(g);
    }
    throw Error("unknown RDF format");
}

} // namespace dcatforge::rdf
