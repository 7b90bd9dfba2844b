#include "latgreen/error.hpp"

namespace latgreen {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DirectionMismatch: return "DirectionMismatch";
    case ErrorKind::InvalidArity: return "InvalidArity";
    case ErrorKind::EmptyInterior: return "EmptyInterior";
    case ErrorKind::OriginNotCovered: return "OriginNotCovered";
    case ErrorKind::BoxTooSmall: return "BoxTooSmall";
    case ErrorKind::BoxMismatch: return "BoxMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ZeroOperator: return "ZeroOperator";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

void raise(ErrorKind kind, const std::string& what)
{
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

} // namespace latgreen
