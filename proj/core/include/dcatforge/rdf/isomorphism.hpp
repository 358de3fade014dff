#pragma once

#include "dcatforge/error.hpp"
#include "dcatforge/rdf/graph.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace dcatforge::rdf {

/// The bounded canonical-labeling search refuses graphs with more blank
/// nodes than this.
inline constexpr std::size_t kMaxBlankNodes = 64;

class ComplexityLimit : public Error {
public:
    using Error::Error;
};

/// True iff some bijection of blank-node labels maps a's triple set onto
/// b's. Ground triples must match exactly. Throws ComplexityLimit when
/// either graph has more than kMaxBlankNodes blank nodes.
bool graph_isomorphic(const Graph& a, const Graph& b);

/// Deterministic rank per blank-node label, computed by iterative
/// neighborhood hashing with lexicographic tie-breaking. Serializers use it
/// to order blank nodes.
std::map<std::string, std::size_t> canonical_blank_ranks(const Graph& g);

} // namespace dcatforge::rdf
