#include "onto/xml.hpp"

#include <cctype>

namespace onto::xml {

const std::string* Element::attr(std::string_view name) const {
    for (const auto& a : attrs) {
        if (a.name == name) return &a.value;
    }
    return nullptr;
}

std::string escape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    std::size_t pos() const { return pos_; }
    int line() const { return line_; }
    int column() const { return col_; }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    bool starts_with(std::string_view s) const {
        return text_.compare(pos_, s.size(), s) == 0;
    }

    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip(std::size_t n) {
        for (std::size_t i = 0; i < n && !eof(); ++i) take();
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) take();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col_);
    }

    // Advances past the first occurrence of `end`, failing at EOF.
    void skip_until(std::string_view end, const std::string& what) {
        while (!eof()) {
            if (starts_with(end)) {
                skip(end.size());
                return;
            }
            take();
        }
        fail("unterminated " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
    return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '-' || c == '.';
}

std::string read_name(Cursor& cur) {
    if (!is_name_start(cur.peek())) cur.fail("expected name");
    std::string name;
    while (!cur.eof() && is_name_char(cur.peek())) name += cur.take();
    return name;
}

void append_reference(Cursor& cur, std::string& out) {
    cur.take();  // '&'
    std::string ref;
    while (!cur.eof() && cur.peek() != ';') ref += cur.take();
    if (cur.eof()) cur.fail("unterminated entity reference");
    cur.take();  // ';'
    if (ref == "amp") out += '&';
    else if (ref == "lt") out += '<';
    else if (ref == "gt") out += '>';
    else if (ref == "quot") out += '"';
    else if (ref == "apos") out += '\'';
    else if (!ref.empty() && ref[0] == '#') {
        long code = 0;
        try {
            code = (ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X'))
                       ? std::stol(ref.substr(2), nullptr, 16)
                       : std::stol(ref.substr(1));
        } catch (const std::exception&) {
            cur.fail("bad character reference &" + ref + ";");
        }
        if (code <= 0 || code > 0x10FFFF) cur.fail("bad character reference &" + ref + ";");
        // UTF-8 encode.
        unsigned long cp = static_cast<unsigned long>(code);
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    } else {
        cur.fail("unknown entity &" + ref + ";");
    }
}

std::string read_attr_value(Cursor& cur) {
    char quote = cur.peek();
    if (quote != '"' && quote != '\'') cur.fail("expected quoted attribute value");
    cur.take();
    std::string value;
    while (!cur.eof() && cur.peek() != quote) {
        if (cur.peek() == '&') append_reference(cur, value);
        else if (cur.peek() == '<') cur.fail("'<' in attribute value");
        else value += cur.take();
    }
    if (cur.eof()) cur.fail("unterminated attribute value");
    cur.take();
    return value;
}

// Skips comments, processing instructions and DOCTYPE at any position.
// Returns true if something was skipped.
bool skip_misc(Cursor& cur) {
    if (cur.starts_with("<!--")) {
        cur.skip(4);
        cur.skip_until("-->", "comment");
        return true;
    }
    if (cur.starts_with("<?")) {
        cur.skip(2);
        cur.skip_until("?>", "processing instruction");
        return true;
    }
    if (cur.starts_with("<!DOCTYPE")) {
        cur.skip(9);
        cur.skip_until(">", "DOCTYPE declaration");
        return true;
    }
    return false;
}

Element parse_element(Cursor& cur) {
    Element el;
    el.src_begin = cur.pos();
    el.line = cur.line();
    el.column = cur.column();
    if (cur.take() != '<') cur.fail("expected '<'");
    el.name = read_name(cur);
    for (;;) {
        cur.skip_ws();
        if (cur.eof()) cur.fail("unterminated start tag <" + el.name);
        if (cur.starts_with("/>")) {
            cur.skip(2);
            el.src_end = cur.pos();
            return el;
        }
        if (cur.peek() == '>') {
            cur.take();
            break;
        }
        Attr attr;
        attr.name = read_name(cur);
        cur.skip_ws();
        if (cur.peek() != '=') cur.fail("expected '=' after attribute " + attr.name);
        cur.take();
        cur.skip_ws();
        attr.value = read_attr_value(cur);
        el.attrs.push_back(std::move(attr));
    }
    // Content.
    for (;;) {
        if (cur.eof()) cur.fail("missing end tag </" + el.name + ">");
        if (cur.starts_with("</")) {
            cur.skip(2);
            std::string closing = read_name(cur);
            if (closing != el.name)
                cur.fail("mismatched end tag </" + closing + ">, expected </" + el.name + ">");
            cur.skip_ws();
            if (cur.peek() != '>') cur.fail("malformed end tag </" + closing + ">");
            cur.take();
            el.src_end = cur.pos();
            return el;
        }
        if (cur.starts_with("<![CDATA[")) {
            cur.skip(9);
            while (!cur.eof() && !cur.starts_with("]]>")) el.text += cur.take();
            if (cur.eof()) cur.fail("unterminated CDATA section");
            cur.skip(3);
            continue;
        }
        if (skip_misc(cur)) continue;
        if (cur.peek() == '<') {
            el.children.push_back(parse_element(cur));
            continue;
        }
        if (cur.peek() == '&') {
            append_reference(cur, el.text);
            continue;
        }
        el.text += cur.take();
    }
}

}  // namespace

Element parse_document(std::string_view text) {
    Cursor cur(text);
    if (cur.starts_with("\xEF\xBB\xBF")) cur.skip(3);  // UTF-8 BOM
    for (;;) {
        cur.skip_ws();
        if (cur.eof()) cur.fail("document has no root element");
        if (skip_misc(cur)) continue;
        if (cur.peek() == '<') break;
        cur.fail("unexpected character before root element");
    }
    Element root = parse_element(cur);
    cur.skip_ws();
    while (!cur.eof()) {
        if (!skip_misc(cur)) cur.fail("trailing content after root element");
        cur.skip_ws();
    }
    return root;
}

}  // namespace onto::xml
