#pragma once

#include <stdexcept>
#include <string>

namespace tautilt {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text. Carries 1-based line/column of the offending token.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_ = 0)
        : Error("parse error at line " + std::to_string(line_) +
                (column_ > 0 ? ", column " + std::to_string(column_) : std::string{}) + ": " + msg),
          line(line_), column(column_) {}
};

// An exhaustive search (module tuples, Hom-space scans, End-idempotent
// scans) would exceed the configured cap. Never silently truncated.
struct CapExceeded : Error {
    using Error::Error;
};

// Paths of maximal length survive outside the ideal: the quotient is
// infinite dimensional, or the ideal is not admissible, or max_length
// is too small to certify either way.
struct InfiniteDimensional : Error {
    using Error::Error;
};

// Contract violation by the caller (wrong algebra, empty module where
// forbidden, E = all vertices, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

} // namespace tautilt
