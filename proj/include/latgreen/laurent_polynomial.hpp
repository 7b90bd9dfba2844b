#ifndef LATGREEN_LAURENT_POLYNOMIAL_HPP
#define LATGREEN_LAURENT_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "latgreen/exponent_vector.hpp"
#include "latgreen/rational.hpp"

namespace latgreen {

/**
 * Sparse multivariate Laurent polynomial with rational coefficients.
 *
 * Terms are kept in a map ordered by graded-lex, so iteration order is
 * deterministic and the leading term is the last entry. No stored
 * coefficient is ever zero; the zero polynomial is the empty map.
 */
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

    explicit LaurentPolynomial(std::size_t num_vars);

    static LaurentPolynomial constant(std::size_t num_vars, const Rational& c);
    static LaurentPolynomial monomial(const ExponentVector& exponent, const Rational& c = 1);
    /// z_i^power
    static LaurentPolynomial variable(std::size_t num_vars, std::size_t i, int power = 1);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// True if no exponent is negative.
    bool is_ordinary() const;
    /// True if variable v occurs with a nonzero exponent.
    bool involves(std::size_t v) const;

    Rational coefficient(const ExponentVector& exponent) const;
    /// Constant term (coefficient of the zero exponent).
    Rational constant_term() const;

    /// Leading term under graded-lex. Raises ZeroPolynomial on zero.
    const std::pair<const ExponentVector, Rational>& leading_term() const;

    /// Adds c * z^exponent in place, dropping the term if it cancels.
    void add_term(const ExponentVector& exponent, const Rational& c);

    /// Per-variable minimum exponent over the support (zero vector for 0).
    ExponentVector min_exponents() const;

    /// Multiplies by z^shift.
    LaurentPolynomial shifted(const ExponentVector& shift) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const Rational& c);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
    friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }

    LaurentPolynomial pow(unsigned exponent) const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    /// Canonical text, leading term first, e.g. "-1/4*z1 - 1/4*z2 + 1 - 1/4*1/z2 - 1/4*1/z1".
    /// The output is accepted by the operator parser.
    std::string str(const std::string& var_prefix = "z") const;

private:
    void require_same_arity(const LaurentPolynomial& other) const;

    std::size_t num_vars_;
    TermMap terms_;
};

enum class RingOp { Add, Sub, Mul };

/// Ring operation dispatch; differing variable counts raise ArityMismatch.
LaurentPolynomial lp_arith(const LaurentPolynomial& p, const LaurentPolynomial& q, RingOp kind);

/// Substitutes z_i -> 1/z_i in every variable.
LaurentPolynomial mirror(const LaurentPolynomial& p);

/// (low, high) exponent of variable v over the support. Raises ZeroPolynomial on 0.
std::pair<int, int> degree_range(const LaurentPolynomial& p, std::size_t v);

/// Coefficient of z_v^k, as a polynomial in which z_v no longer occurs.
LaurentPolynomial coefficient_of(const LaurentPolynomial& p, std::size_t v, int k);

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

} // namespace latgreen

#endif // LATGREEN_LAURENT_POLYNOMIAL_HPP
