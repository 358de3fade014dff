#pragma once

#include "dcatforge/error.hpp"
#include "dcatforge/rdf/graph.hpp"

#include <string>
#include <string_view>

namespace dcatforge::rdf {

enum class Format { RdfXml, Turtle };

/// Malformed input in the requested format.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& reason)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                reason),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed input using a construct outside the supported subset. Raised
/// instead of silently dropping triples.
class UnsupportedFeature : public Error {
public:
    using Error::Error;
};

std::string_view format_name(Format f);

/// Parses a document into a Graph. Namespace/prefix declarations are captured
/// into the graph's prefix table.
Graph parse(std::string_view document, Format format);

/// Serializes deterministically: triples ordered by (subject, predicate,
/// object) with blank nodes ordered by canonical label, prefixes sorted.
/// The output reparses to a graph isomorphic to the input.
std::string serialize(const Graph& g, Format format);

Graph parse_rdfxml(std::string_view document);
Graph parse_turtle(std::string_view document);
std::string serialize_rdfxml(const Graph& g);
std::string serialize_turtle(const Graph& g);

} // namespace dcatforge::rdf
