#include "legkit/errors.hpp"

namespace legkit {

std::string_view err_name(Err e) {
    switch (e) {
    case Err::SyntaxError: return "SyntaxError";
    case Err::InvalidPosition: return "InvalidPosition";
    case Err::OpenDiagram: return "OpenDiagram";
    case Err::EmptyDiagram: return "EmptyDiagram";
    case Err::NotClosed: return "NotClosed";
    case Err::SingleComponent: return "SingleComponent";
    case Err::BadLocator: return "BadLocator";
    case Err::NoZigzag: return "NoZigzag";
    case Err::GeometryDegenerate: return "GeometryDegenerate";
    case Err::NonGeneric: return "NonGeneric";
    case Err::DegenerateTangent: return "DegenerateTangent";
    case Err::NotATree: return "NotATree";
    case Err::BadSigning: return "BadSigning";
    case Err::NotAcceptable: return "NotAcceptable";
    case Err::SignMismatch: return "SignMismatch";
    case Err::NotEndEdge: return "NotEndEdge";
    case Err::OutOfRange: return "OutOfRange";
    case Err::BadInvariants: return "BadInvariants";
    case Err::NotConnected: return "NotConnected";
    case Err::BadLeaves: return "BadLeaves";
    case Err::PatternMismatch: return "PatternMismatch";
    case Err::NotEllipticForm: return "NotEllipticForm";
    case Err::TightnessViolation: return "TightnessViolation";
    case Err::NotOvertwisted: return "NotOvertwisted";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::ZeroSlope: return "ZeroSlope";
    }
    return "Error";
}

}  // namespace legkit
