#ifndef LATGREEN_ERROR_HPP
#define LATGREEN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace latgreen {

enum class ErrorKind {
    DivisionByZero,
    ArityMismatch,
    ZeroPolynomial,
    DirectionMismatch,
    InvalidArity,
    EmptyInterior,
    OriginNotCovered,
    BoxTooSmall,
    BoxMismatch,
    SyntaxError,
    ZeroOperator,
    IndexOutOfRange,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can dispatch on it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

} // namespace latgreen

#endif // LATGREEN_ERROR_HPP
