#pragma once

#include <stdexcept>
#include <string>

namespace onto {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (XML, database files, TSV records).
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line(line), column(column) {}
    int line;
    int column;
};

// Structurally well-formed input that breaks a model invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Knowledge-base files that cannot be loaded.
struct LoadError : Error {
    using Error::Error;
};

// Label that cannot be turned into a lemma key.
struct PreprocessError : Error {
    using Error::Error;
};

// Hit-count provider failure; no partial results are kept.
struct AcquireError : Error {
    using Error::Error;
};

// Inconsistent relation structure discovered while building a hierarchy.
struct MergeError : Error {
    using Error::Error;
};

}  // namespace onto
