/* Apache License, Version 2.0 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polylink {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

enum class ValidationFault {
    TooFewVertices,
    DuplicateVertex,
    EdgeCrossing,
    CollinearOverlap,
};

/// A vertex list failed the simple-polygon checks. `i`, `j` name the
/// offending vertex or edge indices where that is meaningful.
class ValidationError : public Error {
public:
    ValidationError(ValidationFault fault, std::size_t i, std::size_t j, const std::string& what)
        : Error(what), fault(fault), i(i), j(j) {}
    ValidationFault fault;
    std::size_t i, j;
};

/// Point is on the polygon or its raindrop ray meets a vertex.
class NotInS0 : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class ComponentMismatch : public Error {
public:
    using Error::Error;
};

class OnBoundaryInput : public Error {
public:
    using Error::Error;
};

/// A verified halving/doubling search exceeded its iteration cap. This
/// signals a bug in the library, not a problem with the input.
class HaltingCapExceeded : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class VerificationFailed : public Error {
public:
    using Error::Error;
};

/// The oracle declined the instance (size cap).
class OracleRefused : public Error {
public:
    using Error::Error;
};

inline void require(bool cond, const char* what) {
    if (!cond) throw PreconditionViolated(what);
}

}  // namespace polylink
