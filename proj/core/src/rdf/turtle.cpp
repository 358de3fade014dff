#include "dcatforge/rdf/io.hpp"
#include "dcatforge/rdf/isomorphism.hpp"
#include "dcatforge/rdf/namespaces.hpp"
#include "dcatforge/util/ids.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace dcatforge::rdf {

namespace {

enum class TokKind {
    IriRef,     // <...>
    Pname,      // prefix:local (value = "prefix\0local")
    Blank,      // _:label
    String,     // "..."
    LangTag,    // @tag
    PrefixDecl, // @prefix
    DtypeMark,  // ^^
    A,          // keyword a
    Dot,
    Semicolon,
    Comma,
    LBracket,
    RBracket,
    End,
};

struct Token {
    TokKind kind;
    std::string value;
    std::string aux; // local part of a PNAME
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view in) : in_(in) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        for (;;) {
            skip_ws_and_comments();
            Token t = next();
            const bool at_end = t.kind == TokKind::End;
            tokens.push_back(std::move(t));
            if (at_end) return tokens;
        }
    }

private:
    std::string_view in_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;

    [[noreturn]] void fail(const std::string& reason) const {
        throw SyntaxError(line_, pos_ - line_start_ + 1, reason);
    }

    bool eof() const { return pos_ >= in_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
    }

    char advance() {
        const char c = in_[pos_++];
        if (c == '\n') {
            ++line_;
            line_start_ = pos_;
        }
        return c;
    }

    void skip_ws_and_comments() {
        for (;;) {
            while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
            if (!eof() && peek() == '#') {
                while (!eof() && peek() != '\n') advance();
                continue;
            }
            return;
        }
    }

    Token token(TokKind kind, std::string value = {}, std::string aux = {}) const {
        return Token{kind, std::move(value), std::move(aux), line_, pos_ - line_start_ + 1};
    }

    static bool pname_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    }

    void append_codepoint(std::string& out, unsigned long cp) {
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
            fail("\\U escape out of range");
        }
    }

    void read_unicode_escape(std::string& out, int digits) {
        unsigned long cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (eof() || !std::isxdigit(static_cast<unsigned char>(peek()))) {
                fail("malformed unicode escape");
            }
            const char c = advance();
            cp = cp * 16 + static_cast<unsigned long>(
                               std::isdigit(static_cast<unsigned char>(c))
                                   ? c - '0'
                                   : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
        }
        append_codepoint(out, cp);
    }

    Token next() {
        if (eof()) return token(TokKind::End);
        const char c = peek();
        switch (c) {
        case '<': return read_iriref();
        case '"': return read_string();
        case '.': advance(); return token(TokKind::Dot);
        case ';': advance(); return token(TokKind::Semicolon);
        case ',': advance(); return token(TokKind::Comma);
        case '[': advance(); return token(TokKind::LBracket);
        case ']': advance(); return token(TokKind::RBracket);
        case '(': fail("collections '(...)' are outside the supported Turtle subset");
        case '^':
            advance();
            if (peek() != '^') fail("expected '^^'");
            advance();
            return token(TokKind::DtypeMark);
        case '@': return read_at_word();
        case '_': return read_blank();
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
            throw UnsupportedFeature(
                "numeric literal shorthand at line " + std::to_string(line_) +
                " is outside the supported Turtle subset (use \"...\"^^xsd:...)");
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == ':') return read_pname_or_keyword();
        fail(std::string("unexpected character '") + c + "'");
    }

    Token read_iriref() {
        advance(); // '<'
        std::string value;
        for (;;) {
            if (eof()) fail("unterminated IRI");
            const char c = advance();
            if (c == '>') break;
            if (c == '\\') {
                const char esc = eof() ? '\0' : advance();
                if (esc == 'u') read_unicode_escape(value, 4);
                else if (esc == 'U') read_unicode_escape(value, 8);
                else fail("invalid escape in IRI");
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"') {
                fail("invalid character in IRI");
            }
            value += c;
        }
        return token(TokKind::IriRef, std::move(value));
    }

    Token read_string() {
        if (peek(1) == '"' && peek(2) == '"') {
            throw UnsupportedFeature("triple-quoted strings are outside the supported subset");
        }
        advance(); // opening quote
        std::string value;
        for (;;) {
            if (eof()) fail("unterminated string");
            const char c = advance();
            if (c == '"') break;
            if (c == '\n') fail("newline in string literal");
            if (c == '\\') {
                const char esc = eof() ? '\0' : advance();
                switch (esc) {
                case '"': value += '"'; break;
                case '\\': value += '\\'; break;
                case 'n': value += '\n'; break;
                case 'r': value += '\r'; break;
                case 't': value += '\t'; break;
                case 'u': read_unicode_escape(value, 4); break;
                case 'U': read_unicode_escape(value, 8); break;
                default: fail("invalid string escape");
                }
                continue;
            }
            value += c;
        }
        return token(TokKind::String, std::move(value));
    }

    Token read_at_word() {
        advance(); // '@'
        std::string word;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
            word += advance();
        }
        if (word == "prefix") return token(TokKind::PrefixDecl);
        if (word == "base") {
            throw UnsupportedFeature("@base is outside the supported Turtle subset");
        }
        if (word.empty()) fail("dangling '@'");
        return token(TokKind::LangTag, std::move(word));
    }

    Token read_blank() {
        advance(); // '_'
        if (peek() != ':') fail("expected '_:'");
        advance();
        std::string label;
        while (!eof() && pname_char(peek())) label += advance();
        if (label.empty()) fail("empty blank node label");
        return token(TokKind::Blank, std::move(label));
    }

    Token read_pname_or_keyword() {
        std::string prefix;
        while (!eof() && pname_char(peek())) prefix += advance();
        if (eof() || peek() != ':') {
            if (prefix == "a") return token(TokKind::A);
            if (prefix == "PREFIX" || prefix == "BASE") {
                throw UnsupportedFeature("SPARQL-style " + prefix +
                                         " is outside the supported Turtle subset (use @prefix)");
            }
            if (prefix == "true" || prefix == "false") {
                throw UnsupportedFeature(
                    "boolean literal shorthand is outside the supported subset");
            }
            fail("expected ':' after '" + prefix + "'");
        }
        advance(); // ':'
        std::string local;
        for (;;) {
            if (!eof() && pname_char(peek())) {
                local += advance();
            } else if (!eof() && peek() == '.' && pname_char(peek(1))) {
                local += advance(); // interior dot stays in the local name
            } else {
                break;
            }
        }
        return token(TokKind::Pname, std::move(prefix), std::move(local));
    }
};

class TurtleParser {
public:
    explicit TurtleParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
        for (const auto& t : tokens_) {
            if (t.kind == TokKind::Blank) used_blank_labels_.insert(t.value);
        }
    }

    Graph parse() {
        while (peek().kind != TokKind::End) {
            if (peek().kind == TokKind::PrefixDecl) {
                parse_prefix_decl();
            } else {
                parse_triples();
            }
        }
        return std::move(graph_);
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Graph graph_;
    std::map<std::string, std::string> prefixes_;
    std::set<std::string> used_blank_labels_;
    std::size_t next_blank_ = 0;

    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const Token& at, const std::string& reason) const {
        throw SyntaxError(at.line, at.column, reason);
    }

    const Token& expect(TokKind kind, const char* what) {
        if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
        return advance();
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

    void parse_prefix_decl() {
        advance(); // @prefix
        const Token name = expect(TokKind::Pname, "prefix name");
        if (!name.aux.empty()) fail(name, "prefix declaration names end with ':'");
        const Token iri = expect(TokKind::IriRef, "namespace IRI");
        expect(TokKind::Dot, "'.'");
        prefixes_[name.value] = iri.value;
        graph_.add_prefix(name.value, iri.value);
    }

    Term make_iri(const Token& t) {
        std::string iri;
        if (t.kind == TokKind::IriRef) {
            iri = t.value;
        } else {
            const auto it = prefixes_.find(t.value);
            if (it == prefixes_.end()) fail(t, "undeclared prefix '" + t.value + ":'");
            iri = it->second + t.aux;
        }
        if (!util::is_absolute_iri(iri)) {
            throw UnsupportedFeature("relative IRI <" + iri + "> at line " +
                                     std::to_string(t.line) +
                                     " (@base resolution is outside the supported subset)");
        }
        return Term::iri(iri);
    }

    void parse_triples() {
        Term subject = parse_subject();
        parse_predicate_object_list(subject, /*bracketed=*/false);
        expect(TokKind::Dot, "'.'");
    }

    Term parse_subject() {
        const Token& t = peek();
        switch (t.kind) {
        case TokKind::IriRef:
        case TokKind::Pname: return make_iri(advance());
        case TokKind::Blank: return Term::blank(advance().value);
        case TokKind::LBracket:
            throw UnsupportedFeature(
                "anonymous blank node as subject (line " + std::to_string(t.line) +
                ") is outside the supported subset; use a labeled blank node");
        default: fail(t, "expected a subject");
        }
    }

    void parse_predicate_object_list(const Term& subject, bool bracketed) {
        for (;;) {
            Term predicate = parse_predicate();
            for (;;) {
                Term object = parse_object();
                graph_.add(Triple{subject, predicate, std::move(object)});
                if (peek().kind == TokKind::Comma) {
                    advance();
                    continue;
                }
                break;
            }
            if (peek().kind == TokKind::Semicolon) {
                while (peek().kind == TokKind::Semicolon) advance();
                const TokKind k = peek().kind;
                if (k == TokKind::Dot || (bracketed && k == TokKind::RBracket)) return;
                continue;
            }
            return;
        }
    }

    Term parse_predicate() {
        const Token& t = peek();
        if (t.kind == TokKind::A) {
            advance();
            return Term::iri(ns::rdf_type);
        }
        if (t.kind == TokKind::IriRef || t.kind == TokKind::Pname) return make_iri(advance());
        fail(t, "expected a predicate");
    }

    Term parse_object() {
        const Token& t = peek();
        switch (t.kind) {
        case TokKind::IriRef:
        case TokKind::Pname: return make_iri(advance());
        case TokKind::Blank: return Term::blank(advance().value);
        case TokKind::String: return parse_literal();
        case TokKind::LBracket: return parse_anon_blank();
        default: fail(t, "expected an object");
        }
    }

    Term parse_literal() {
        const Token str = advance();
        if (peek().kind == TokKind::DtypeMark) {
            advance();
            const Token& dt = peek();
            if (dt.kind != TokKind::IriRef && dt.kind != TokKind::Pname) {
                fail(dt, "expected datatype IRI after '^^'");
            }
            return Term::typed_literal(str.value, make_iri(advance()).value());
        }
        if (peek().kind == TokKind::LangTag) {
            return Term::lang_literal(str.value, advance().value);
        }
        return Term::literal(str.value);
    }

    Term parse_anon_blank() {
        advance(); // '['
        Term node = Term::blank(fresh_blank());
        if (peek().kind != TokKind::RBracket) {
            parse_predicate_object_list(node, /*bracketed=*/true);
        }
        expect(TokKind::RBracket, "']'");
        return node;
    }
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

bool pname_local_safe(std::string_view local) {
    if (local.empty()) return false;
    const auto head = [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    if (!head(local[0])) return false;
    for (const char c : local.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    }
    return true;
}

std::string escape_turtle_string(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

class TurtleWriter {
public:
    explicit TurtleWriter(const Graph& g) : graph_(g), ranks_(canonical_blank_ranks(g)) {}

    std::string write() {
        std::ostringstream out;
        for (const auto& [prefix, iri] : graph_.prefixes()) {
            out << "@prefix " << prefix << ": <" << iri << "> .\n";
        }
        if (!graph_.prefixes().empty() && !graph_.empty()) out << '\n';

        bool first_subject = true;
        for (const auto& subject : ordered_subjects()) {
            if (!first_subject) out << '\n';
            first_subject = false;
            write_subject(out, subject);
        }
        return out.str();
    }

private:
    const Graph& graph_;
    std::map<std::string, std::size_t> ranks_;

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

    std::string render_iri(const std::string& iri) const {
        for (const auto& [prefix, nsiri] : graph_.prefixes()) {
            if (iri.starts_with(nsiri)) {
                const std::string local = iri.substr(nsiri.size());
                if (pname_local_safe(local)) return prefix + ":" + local;
            }
        }
        return "<" + iri + ">";
    }

    std::string render_term(const Term& t) const {
        switch (t.kind()) {
        case TermKind::Iri: return render_iri(t.value());
        case TermKind::Blank: return "_:" + t.value();
        case TermKind::Literal: break;
        }
        std::string out = "\"" + escape_turtle_string(t.value()) + "\"";
        if (!t.datatype().empty()) out += "^^" + render_iri(t.datatype());
        if (!t.language().empty()) out += "@" + t.language();
        return out;
    }

    void write_subject(std::ostringstream& out, const Term& subject) const {
        std::vector<Triple> triples = graph_.with_subject(subject);
        // rdf:type first (written as 'a'), then predicate order, blank
        // objects by canonical rank.
        std::sort(triples.begin(), triples.end(), [this](const Triple& a, const Triple& b) {
            const bool at = a.predicate.value() == ns::rdf_type;
            const bool bt = b.predicate.value() == ns::rdf_type;
            if (at != bt) return at;
            if (a.predicate != b.predicate) return a.predicate < b.predicate;
            const bool ab = a.object.is_blank(), bb = b.object.is_blank();
            if (ab && bb) return ranks_.at(a.object.value()) < ranks_.at(b.object.value());
            return a.object < b.object;
        });

        out << render_term(subject);
        std::string previous_predicate;
        bool first = true;
        for (const auto& t : triples) {
            if (!first && t.predicate.value() == previous_predicate) {
                out << ", " << render_term(t.object);
                continue;
            }
            if (!first) out << " ;";
            out << "\n    "
                << (t.predicate.value() == ns::rdf_type ? "a" : render_iri(t.predicate.value()))
                << " " << render_term(t.object);
            previous_predicate = t.predicate.value();
            first = false;
        }
        out << " .\n";
    }
};

} // namespace

Graph parse_turtle(std::string_view document) {
    Lexer lexer(document);
    TurtleParser parser(lexer.run());
    return parser.parse();
}

std::string serialize_turtle(const Graph& g) {
    return TurtleWriter(g).write();
}

} // namespace dcatforge::rdf
