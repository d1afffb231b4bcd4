#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "onto/errors.hpp"

namespace onto::xml {

struct Attr {
    std::string name;  // as written, e.g. "rdf:ID" or "xmlns:owl"
    std::string value;
};

struct Element {
    std::string name;  // as written, prefix kept
    std::vector<Attr> attrs;
    std::vector<Element> children;
    std::string text;  // concatenated character data of this element
    int line = 0;
    int column = 0;
    std::size_t src_begin = 0;  // byte span of the element in the source
    std::size_t src_end = 0;

    const std::string* attr(std::string_view name) const;
};

// Parses a standalone XML document and returns its root element.
// Supports the subset needed for RDF/XML: prolog, comments, CDATA,
// character/entity references, elements and attributes. Throws ParseError
// with line/column on malformed input.
Element parse_document(std::string_view text);

// Escapes <, >, &, " and ' for use in attribute values or text content.
std::string escape(std::string_view raw);

}  // namespace onto::xml
