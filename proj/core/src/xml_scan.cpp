#include "xml_scan.hpp"

#include <cctype>

namespace fersml::xml::detail {

namespace {

bool is_xml_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

bool is_name_start(char c) noexcept {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) noexcept {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
           c == '-' || c == '.';
}

class Scanner {
public:
    Scanner(std::string_view bytes, int max_depth)
        : bytes_(bytes), max_depth_(max_depth) {}

    ScanResult run() {
        skip_bom();
        if (bytes_.empty() || all_whitespace_remaining()) {
            return fail(1, 1, "empty document: expected a root element");
        }
        skip_prolog();
        if (failed_) return take_result();

        if (!at('<')) {
            return fail(line_, column_, "expected root element");
        }
        XmlNode root;
        parse_element(root, 0);
        if (failed_) return take_result();

        skip_misc_after_root();
        if (failed_) return take_result();

        ScanResult result;
        result.root = std::move(root);
        return result;
    }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    int max_depth_;
    bool failed_ = false;
    ScanError error_;

    bool eof() const noexcept { return pos_ >= bytes_.size(); }
    char peek() const noexcept { return bytes_[pos_]; }
    bool at(char c) const noexcept { return !eof() && bytes_[pos_] == c; }

    bool starts_with(std::string_view prefix) const noexcept {
        return bytes_.substr(pos_, prefix.size()) == prefix;
    }

    void advance() noexcept {
        if (bytes_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void advance_n(std::size_t n) noexcept {
        for (std::size_t i = 0; i < n && !eof(); ++i) advance();
    }

    ScanResult fail(int line, int column, std::string message) {
        set_error(line, column, std::move(message));
        return take_result();
    }

    void set_error(int line, int column, std::string message) {
        if (failed_) return;
        failed_ = true;
        error_ = ScanError{line, column, std::move(message)};
    }

    ScanResult take_result() {
        ScanResult result;
        result.error = error_;
        return result;
    }

    bool all_whitespace_remaining() const noexcept {
        for (std::size_t i = pos_; i < bytes_.size(); ++i) {
            if (!is_xml_space(bytes_[i])) return false;
        }
        return true;
    }

    void skip_bom() {
        if (bytes_.substr(0, 3) == "\xEF\xBB\xBF") {
            pos_ = 3;
            column_ = 1;  // the BOM is invisible
        }
    }

    void skip_whitespace() {
        while (!eof() && is_xml_space(peek())) advance();
    }

    // XML declaration (only at the very start), comments, whitespace.
    void skip_prolog() {
        skip_whitespace();
        if (starts_with("<?xml")) {
            const int decl_line = line_, decl_col = column_;
            std::size_t end = bytes_.find("?>", pos_);
            if (end == std::string_view::npos) {
                set_error(decl_line, decl_col, "unterminated XML declaration");
                return;
            }
            advance_n(end + 2 - pos_);
        }
        for (;;) {
            skip_whitespace();
            if (starts_with("<!--")) {
                skip_comment();
                if (failed_) return;
                continue;
            }
            if (starts_with("<!DOCTYPE") || starts_with("<!doctype")) {
                set_error(line_, column_, "DOCTYPE is not supported");
                return;
            }
            if (starts_with("<?")) {
                set_error(line_, column_, "processing instructions are not supported");
                return;
            }
            break;
        }
    }

    void skip_comment() {
        const int start_line = line_, start_col = column_;
        advance_n(4);  // "<!--"
        const std::size_t end = bytes_.find("-->", pos_);
        if (end == std::string_view::npos) {
            set_error(start_line, start_col, "unterminated comment");
            return;
        }
        advance_n(end + 3 - pos_);
    }

    void skip_misc_after_root() {
        for (;;) {
            skip_whitespace();
            if (eof()) return;
            if (starts_with("<!--")) {
                skip_comment();
                if (failed_) return;
                continue;
            }
            set_error(line_, column_, "content after the root element");
            return;
        }
    }

    std::string parse_name() {
        if (eof() || !is_name_start(peek())) {
            set_error(line_, column_, "expected a name");
            return {};
        }
        std::string name;
        while (!eof() && is_name_char(peek())) {
            name.push_back(peek());
            advance();
        }
        return name;
    }

    // Decode &amp; &lt; &gt; &quot; &apos; &#dd; &#xhh; starting at '&'.
    void parse_entity(std::string& out) {
        const int ent_line = line_, ent_col = column_;
        advance();  // '&'
        std::string entity;
        while (!eof() && peek() != ';' && entity.size() <= 10) {
            entity.push_back(peek());
            advance();
        }
        if (!at(';')) {
            set_error(ent_line, ent_col, "unterminated entity reference");
            return;
        }
        advance();  // ';'
        if (entity == "amp") {
            out.push_back('&');
        } else if (entity == "lt") {
            out.push_back('<');
        } else if (entity == "gt") {
            out.push_back('>');
        } else if (entity == "quot") {
            out.push_back('"');
        } else if (entity == "apos") {
            out.push_back('\'');
        } else if (!entity.empty() && entity[0] == '#') {
            long code = -1;
            try {
                code = (entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X'))
                           ? std::stol(entity.substr(2), nullptr, 16)
                           : std::stol(entity.substr(1), nullptr, 10);
            } catch (...) {
                code = -1;
            }
            if (code < 0 || code > 0x10FFFF) {
                set_error(ent_line, ent_col, "invalid character reference &" + entity + ";");
                return;
            }
            append_utf8(out, static_cast<unsigned long>(code));
        } else {
            set_error(ent_line, ent_col,
                      "unknown entity &" + entity + "; (external entities are not supported)");
        }
    }

    static void append_utf8(std::string& out, unsigned long code) {
        if (code < 0x80) {
            out.push_back(static_cast<char>(code));
        } else if (code < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (code >> 6)));
            out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
        } else if (code < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (code >> 12)));
            out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (code >> 18)));
            out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
        }
    }

    void parse_attributes(XmlNode& node) {
        for (;;) {
            skip_whitespace();
            if (eof()) {
                set_error(node.line, node.column, "unterminated start tag <" + node.name + ">");
                return;
            }
            if (at('>') || at('/') || at('?')) return;
            XmlAttr attr;
            attr.line = line_;
            attr.column = column_;
            attr.name = parse_name();
            if (failed_) return;
            for (const XmlAttr& existing : node.attrs) {
                if (existing.name == attr.name) {
                    set_error(attr.line, attr.column,
                              "duplicate attribute \"" + attr.name + "\"");
                    return;
                }
            }
            skip_whitespace();
            if (!at('=')) {
                set_error(line_, column_, "expected '=' after attribute name");
                return;
            }
            advance();
            skip_whitespace();
            if (eof() || (peek() != '"' && peek() != '\'')) {
                set_error(line_, column_, "expected quoted attribute value");
                return;
            }
            const char quote = peek();
            advance();
            while (!eof() && peek() != quote) {
                if (peek() == '<') {
                    set_error(line_, column_, "'<' is not allowed in attribute values");
                    return;
                }
                if (peek() == '&') {
                    parse_entity(attr.value);
                    if (failed_) return;
                    continue;
                }
                attr.value.push_back(peek());
                advance();
            }
            if (eof()) {
                set_error(attr.line, attr.column, "unterminated attribute value");
                return;
            }
            advance();  // closing quote
            node.attrs.push_back(std::move(attr));
        }
    }

    void parse_element(XmlNode& node, int depth) {
        if (depth >= max_depth_) {
            set_error(line_, column_, "maximum element nesting depth exceeded");
            return;
        }
        node.line = line_;
        node.column = column_;
        advance();  // '<'
        node.name = parse_name();
        if (failed_) return;
        parse_attributes(node);
        if (failed_) return;

        if (at('/')) {
            advance();
            if (!at('>')) {
                set_error(line_, column_, "expected '>' after '/'");
                return;
            }
            advance();
            return;  // self-closing
        }
        if (!at('>')) {
            set_error(line_, column_, "expected '>' to close start tag <" + node.name + ">");
            return;
        }
        advance();

        // Content loop.
        for (;;) {
            if (eof()) {
                set_error(node.line, node.column,
                          "missing end tag </" + node.name + ">");
                return;
            }
            if (at('<')) {
                if (starts_with("<!--")) {
                    skip_comment();
                    if (failed_) return;
                    continue;
                }
                if (starts_with("<![CDATA[")) {
                    set_error(line_, column_, "CDATA sections are not supported");
                    return;
                }
                if (starts_with("<!")) {
                    set_error(line_, column_, "markup declarations are not supported here");
                    return;
                }
                if (starts_with("<?")) {
                    set_error(line_, column_, "processing instructions are not supported");
                    return;
                }
                if (starts_with("</")) {
                    const int end_line = line_, end_col = column_;
                    advance_n(2);
                    const std::string end_name = parse_name();
                    if (failed_) return;
                    skip_whitespace();
                    if (!at('>')) {
                        set_error(line_, column_, "expected '>' in end tag");
                        return;
                    }
                    advance();
                    if (end_name != node.name) {
                        set_error(end_line, end_col,
                                  "end tag </" + end_name + "> does not match <" +
                                      node.name + ">");
                    }
                    return;
                }
                XmlNode child;
                parse_element(child, depth + 1);
                if (failed_) return;
                node.children.push_back(std::move(child));
                continue;
            }
            if (at('&')) {
                parse_entity(node.text);
                if (failed_) return;
                continue;
            }
            node.text.push_back(peek());
            advance();
        }
    }
};

}  // namespace

ScanResult scan_xml(std::string_view bytes, int max_depth) {
    return Scanner(bytes, max_depth).run();
}

}  // namespace fersml::xml::detail
