#ifndef LATGREEN_POLYNOMIAL_GCD_HPP
#define LATGREEN_POLYNOMIAL_GCD_HPP

#include <cstddef>
#include <optional>

#include "latgreen/laurent_polynomial.hpp"

namespace latgreen {

// All functions here work on ordinary polynomials (no negative exponents) and
// raise InvalidArgument otherwise.

/// q with a = q * b, or nullopt when b does not divide a.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Pseudo-remainder of a by b with respect to variable v.
LaurentPolynomial pseudo_remainder(const LaurentPolynomial& a, const LaurentPolynomial& b, std::size_t v);

/// Greatest common divisor over Q, monic under graded-lex. gcd(0, 0) = 0.
LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Scales p to integer coefficients with gcd 1 and positive leading coefficient.
/// Returns the scale factor applied.
Rational make_integer_primitive(LaurentPolynomial& p);

} // namespace latgreen

#endif // LATGREEN_POLYNOMIAL_GCD_HPP
