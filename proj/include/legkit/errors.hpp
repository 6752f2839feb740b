#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legkit {

enum class Err {
    SyntaxError,
    InvalidPosition,
    OpenDiagram,
    EmptyDiagram,
    NotClosed,
    SingleComponent,
    BadLocator,
    NoZigzag,
    GeometryDegenerate,
    NonGeneric,
    DegenerateTangent,
    NotATree,
    BadSigning,
    NotAcceptable,
    SignMismatch,
    NotEndEdge,
    OutOfRange,
    BadInvariants,
    NotConnected,
    BadLeaves,
    PatternMismatch,
    NotEllipticForm,
    TightnessViolation,
    NotOvertwisted,
    DimensionMismatch,
    ZeroSlope,
};

std::string_view err_name(Err e);

// Every domain failure in the library is one of these.
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const noexcept { return code_; }
    std::string_view name() const { return err_name(code_); }

private:
    Err code_;
};

// syntax errors carry the offending line (1-based)
class SyntaxError : public Error {
public:
    SyntaxError(int line, const std::string& what)
        : Error(Err::SyntaxError, "line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// acceptability failure, condition number 0..4 (0 = embedding not planar)
class NotAcceptable : public Error {
public:
    NotAcceptable(int cond, const std::string& what)
        : Error(Err::NotAcceptable, "condition " + std::to_string(cond) + ": " + what), cond_(cond) {}
    int condition() const noexcept { return cond_; }

private:
    int cond_;
};

}  // namespace legkit
