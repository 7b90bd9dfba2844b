#ifndef LATGREEN_RATIONAL_FUNCTION_HPP
#define LATGREEN_RATIONAL_FUNCTION_HPP

#include <cstddef>
#include <string>

#include "latgreen/laurent_polynomial.hpp"

namespace latgreen {

/**
 * Quotient of two Laurent polynomials in canonical form:
 *  - the denominator is an ordinary polynomial whose least exponent in every
 *    variable is 0,
 *  - numerator and denominator share no non-unit polynomial factor,
 *  - all coefficients are integers with joint gcd 1 and the denominator's
 *    graded-lex leading coefficient is positive.
 * Zero is 0/1. Canonical form makes operator== a value comparison.
 */
class RationalFunction {
public:
    explicit RationalFunction(std::size_t num_vars);
    RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator);
    explicit RationalFunction(const LaurentPolynomial& polynomial);

    std::size_t num_vars() const noexcept { return numerator_.num_vars(); }
    const LaurentPolynomial& numerator() const noexcept { return numerator_; }
    const LaurentPolynomial& denominator() const noexcept { return denominator_; }
    bool is_zero() const noexcept { return numerator_.is_zero(); }
    bool is_polynomial() const { return denominator_.is_constant(); }
    bool is_constant() const { return numerator_.is_constant() && denominator_.is_constant(); }
    /// Value of a constant function; raises InvalidArgument otherwise.
    Rational constant_value() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string str(const std::string& var_prefix = "z") const;

private:
    struct Canonical {};
    RationalFunction(Canonical, LaurentPolynomial numerator, LaurentPolynomial denominator)
        : numerator_(std::move(numerator)), denominator_(std::move(denominator))
    {
    }
    friend RationalFunction rf_normalize(const LaurentPolynomial&, const LaurentPolynomial&);

    LaurentPolynomial numerator_;
    LaurentPolynomial denominator_;
};

/// Canonical representative of num/den. Raises DivisionByZero for den = 0.
RationalFunction rf_normalize(const LaurentPolynomial& num, const LaurentPolynomial& den);

} // namespace latgreen

#endif // LATGREEN_RATIONAL_FUNCTION_HPP
