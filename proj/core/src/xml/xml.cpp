#include "dcatforge/xml/xml.hpp"

#include <cctype>
#include <sstream>

namespace dcatforge::xml {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : Error("xml parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
            reason),
      line_(line),
      column_(column) {}

const std::string* Node::attribute(std::string_view attr_name) const {
    for (const auto& [k, v] : attributes) {
        if (k == attr_name) return &v;
    }
    return nullptr;
}

const Node* Node::first_child(std::string_view child_name) const {
    for (const auto& c : children) {
        if (c.name == child_name) return &c;
    }
    return nullptr;
}

std::vector<const Node*> Node::children_named(std::string_view child_name) const {
    std::vector<const Node*> out;
    for (const auto& c : children) {
        if (c.name == child_name) out.push_back(&c);
    }
    return out;
}

bool Node::text_is_whitespace() const {
    for (const char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string Node::trimmed_text() const {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return text.substr(b, e - b);
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {}

    Node parse() {
        skip_prolog();
        Node root = parse_element();
        skip_misc();
        if (pos_ != in_.size()) fail("content after document element");
        return root;
    }

private:
    std::string_view in_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;

    [[noreturn]] void fail(const std::string& reason) const {
        throw ParseError(line_, pos_ - line_start_ + 1, reason);
    }

    bool eof() const { return pos_ >= in_.size(); }

    char peek() const { return eof() ? '\0' : in_[pos_]; }

    char advance() {
        if (eof()) fail("unexpected end of input");
        const char c = in_[pos_++];
        if (c == '\n') {
            ++line_;
            line_start_ = pos_;
        }
        return c;
    }

    bool consume(std::string_view token) {
        if (in_.substr(pos_).starts_with(token)) {
            for (std::size_t i = 0; i < token.size(); ++i) advance();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    void skip_until(std::string_view terminator, const char* what) {
        while (!consume(terminator)) {
            if (eof()) fail(std::string("unterminated ") + what);
            advance();
        }
    }

    void skip_prolog() {
        skip_ws();
        if (consume("<?xml")) skip_until("?>", "xml declaration");
        skip_misc();
        if (in_.substr(pos_).starts_with("<!DOCTYPE")) fail("DOCTYPE is not supported");
    }

    void skip_misc() {
        for (;;) {
            skip_ws();
            if (consume("<!--")) {
                skip_until("-->", "comment");
            } else if (!eof() && peek() == '<' && pos_ + 1 < in_.size() && in_[pos_ + 1] == '?') {
                skip_until("?>", "processing instruction");
            } else {
                return;
            }
        }
    }

    static bool is_name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
    }

    static bool is_name_char(char c) {
        return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
               c == '.';
    }

    std::string parse_name() {
        if (eof() || !is_name_start(peek())) fail("expected a name");
        std::string name;
        name += advance();
        while (!eof() && is_name_char(peek())) name += advance();
        return name;
    }

    void append_reference(std::string& out) {
        // Called after '&'.
        std::string entity;
        while (!eof() && peek() != ';') {
            entity += advance();
            if (entity.size() > 10) fail("malformed entity reference");
        }
        if (eof()) fail("unterminated entity reference");
        advance(); // ';'
        if (entity == "amp") out += '&';
        else if (entity == "lt") out += '<';
        else if (entity == "gt") out += '>';
        else if (entity == "quot") out += '"';
        else if (entity == "apos") out += '\'';
        else if (!entity.empty() && entity[0] == '#') {
            unsigned long code = 0;
            try {
                code = entity[1] == 'x' || entity[1] == 'X'
                           ? std::stoul(entity.substr(2), nullptr, 16)
                           : std::stoul(entity.substr(1), nullptr, 10);
            } catch (...) {
                fail("malformed character reference &" + entity + ";");
            }
            append_utf8(out, code);
        } else {
            fail("unknown entity &" + entity + ";");
        }
    }

    void append_utf8(std::string& out, unsigned long cp) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xc0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3f));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xe0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
            out += static_cast<char>(0x80 | (cp & 0x3f));
        } else if (cp < 0x110000) {
            out += static_cast<char>(0xf0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
            out += static_cast<char>(0x80 | (cp & 0x3f));
        } else {
            fail("character reference out of range");
        }
    }

    std::string parse_attribute_value() {
        const char quote = advance();
        if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
        std::string value;
        for (;;) {
            if (eof()) fail("unterminated attribute value");
            const char c = advance();
            if (c == quote) break;
            if (c == '<') fail("'<' in attribute value");
            if (c == '&') {
                append_reference(value);
            } else {
                value += c;
            }
        }
        return value;
    }

    Node parse_element() {
        if (!consume("<")) fail("expected an element");
        Node node;
        node.line = line_;
        node.name = parse_name();
        for (;;) {
            skip_ws();
            if (consume("/>")) return node;
            if (consume(">")) break;
            const std::string attr = parse_name();
            skip_ws();
            if (!consume("=")) fail("expected '=' after attribute " + attr);
            skip_ws();
            for (const auto& [k, v] : node.attributes) {
                if (k == attr) fail("duplicate attribute " + attr);
            }
            node.attributes.emplace_back(attr, parse_attribute_value());
        }
        parse_content(node);
        return node;
    }

    void parse_content(Node& node) {
        for (;;) {
            if (eof()) fail("unterminated element <" + node.name + ">");
            if (consume("<!--")) {
                skip_until("-->", "comment");
                continue;
            }
            if (consume("<![CDATA[")) {
                while (!consume("]]>")) {
                    if (eof()) fail("unterminated CDATA section");
                    node.text += advance();
                }
                continue;
            }
            if (in_.substr(pos_).starts_with("</")) {
                consume("</");
                const std::string closing = parse_name();
                if (closing != node.name)
                    fail("mismatched closing tag </" + closing + "> for <" + node.name + ">");
                skip_ws();
                if (!consume(">")) fail("malformed closing tag");
                return;
            }
            if (in_.substr(pos_).starts_with("<?")) {
                skip_until("?>", "processing instruction");
                continue;
            }
            if (peek() == '<') {
                node.children.push_back(parse_element());
                continue;
            }
            const char c = advance();
            if (c == '&') {
                append_reference(node.text);
            } else {
                node.text += c;
            }
        }
    }
};

void write_node(const Node& node, std::ostringstream& out, int depth, int indent) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(depth * indent), ' ')
                                       : std::string();
    out << pad << '<' << node.name;
    for (const auto& [k, v] : node.attributes) {
        out << ' ' << k << "=\"" << escape_attribute(v) << '"';
    }
    const bool has_text = !node.text.empty() && !node.text_is_whitespace();
    if (node.children.empty() && !has_text) {
        out << "/>";
        if (indent > 0) out << '\n';
        return;
    }
    out << '>';
    if (has_text) out << escape_text(node.text);
    if (!node.children.empty()) {
        if (indent > 0 && !has_text) out << '\n';
        for (const auto& c : node.children) write_node(c, out, depth + 1, has_text ? 0 : indent);
        if (indent > 0 && !has_text) out << pad;
    }
    out << "</" << node.name << '>';
    if (indent > 0) out << '\n';
}

} // namespace

Node parse_document(std::string_view text) {
    Parser parser(text);
    return parser.parse();
}

std::string escape_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string escape_attribute(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\n': out += "&#10;"; break;
        case '\t': out += "&#9;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string write(const Node& node, int indent) {
    std::ostringstream out;
    write_node(node, out, 0, indent);
    return out.str();
}

} // namespace dcatforge::xml
