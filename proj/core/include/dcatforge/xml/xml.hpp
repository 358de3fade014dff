#pragma once

#include "dcatforge/error.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcatforge::xml {

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// One element of a parsed document. Names are kept exactly as written
/// (QName form); namespace resolution is the caller's business.
struct Node {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes; // document order
    std::vector<Node> children;                                  // element children
    std::string text; // concatenated character data directly inside this element
    std::size_t line = 0;

    const std::string* attribute(std::string_view attr_name) const;
    const Node* first_child(std::string_view child_name) const;
    std::vector<const Node*> children_named(std::string_view child_name) const;
    bool text_is_whitespace() const;
    std::string trimmed_text() const;
};

/// Parses a standalone XML document and returns its root element.
/// Supported: elements, attributes, character data, entity and character
/// references, comments, processing instructions, CDATA. DOCTYPE is rejected.
Node parse_document(std::string_view text);

std::string escape_text(std::string_view s);
std::string escape_attribute(std::string_view s);

/// Serializes a node subtree. Character data is written before element
/// children; documents this library handles never rely on mixed content.
std::string write(const Node& node, int indent = 0);

} // namespace dcatforge::xml
