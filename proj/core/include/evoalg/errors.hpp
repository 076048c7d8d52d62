#pragma once

#include <stdexcept>
#include <string>

namespace evoalg {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-text errors carry the 1-based line number of the offending line
// (0 when no line applies, e.g. validation after assembly).
struct ParseError : Error {
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

struct MalformedLine : ParseError {
    using ParseError::ParseError;
};
struct DuplicateEdge : ParseError {
    using ParseError::ParseError;
};
struct SelfLoop : ParseError {
    using ParseError::ParseError;
};
struct Disconnected : ParseError {
    Disconnected(const std::string& what, int line = 0) : ParseError(what, line) {}
};
struct MalformedGraph6 : ParseError {
    MalformedGraph6(const std::string& what, int line = 0) : ParseError(what, line) {}
};

// Single-vertex graphs are rejected: vertex 1 would have degree 0, which the
// random-walk algebra cannot accommodate.
struct UnsupportedGraph : Error {
    using Error::Error;
};

struct VertexOutOfRange : Error {
    using Error::Error;
};
struct SizeBound : Error {
    using Error::Error;
};
struct NonSquare : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct SingularMap : Error {
    using Error::Error;
};
struct NotRegularOrBiregular : Error {
    using Error::Error;
};
struct NotRegular : Error {
    using Error::Error;
};
struct SingularStructureMatrix : Error {
    using Error::Error;
};
struct SingularGraph : Error {
    using Error::Error;
};

// Raised by the scalar-system solver when a structure matrix falls outside
// the shape the propagation argument covers (cannot happen for graph-derived
// algebras; see iso_engine.hpp).
struct UnsupportedStructure : Error {
    using Error::Error;
};

}  // namespace evoalg
