#pragma once

#include <stdexcept>
#include <string>

namespace topoface {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input drawing breaks a structural rule (missing edge, endpoint mismatch, ...).
class InvalidDrawing : public Error {
public:
    using Error::Error;
};

/// A geometric configuration that is not in general position.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

class NotSimpleError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class NotOuterVertexError : public Error {
public:
    using Error::Error;
};

class ReprojectionFailure : public Error {
public:
    using Error::Error;
};

class NotPlaneError : public Error {
public:
    using Error::Error;
};

class NotOnBoundaryError : public Error {
public:
    using Error::Error;
};

class NotJordanError : public Error {
public:
    using Error::Error;
};

class OnBoundaryError : public Error {
public:
    using Error::Error;
};

class ConstructionError : public Error {
public:
    using Error::Error;
};

class GeneralPositionError : public ConstructionError {
public:
    using ConstructionError::ConstructionError;
};

class TooLargeError : public Error {
public:
    using Error::Error;
};

/// One of the cited existence lemmas failed on the given input. Carries the
/// witness so the event can be reproduced.
class LemmaViolation : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

class NotAdjacentError : public Error {
public:
    using Error::Error;
};

} // namespace topoface
