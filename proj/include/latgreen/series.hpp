#ifndef LATGREEN_SERIES_HPP
#define LATGREEN_SERIES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latgreen/grid.hpp"
#include "latgreen/laurent_polynomial.hpp"
#include "latgreen/rational_function.hpp"

namespace latgreen {

/// Positive series have exponents bounded below, Negative bounded above.
enum class Direction { Positive, Negative };

char to_char(Direction d) noexcept;

/**
 * One of the 2^n * n! ways to invert a multivariate Laurent polynomial.
 *
 * order[0] is the outermost variable: the inverse is first expanded as a
 * one-sided series in z_{order[0]} in direction directions[0], whose
 * coefficients are rational functions of the remaining variables; each of
 * those is expanded in z_{order[1]}, and so on.
 */
class ExpansionSignature {
public:
    ExpansionSignature(std::vector<std::size_t> order, std::vector<Direction> directions);

    /// Identity order, all Positive.
    static ExpansionSignature standard(std::size_t n);
    /// Parses "2,1;+,-" (1-based variable indices, then directions).
    static ExpansionSignature parse(std::string_view text);

    std::size_t num_vars() const noexcept { return order_.size(); }
    const std::vector<std::size_t>& order() const noexcept { return order_; }
    const std::vector<Direction>& directions() const noexcept { return directions_; }

    /// Inverse of parse().
    std::string str() const;

    friend bool operator==(const ExpansionSignature&, const ExpansionSignature&) = default;

private:
    std::vector<std::size_t> order_;
    std::vector<Direction> directions_;
};

/// All 2^n * n! signatures: permutations in lexicographic order, and for each
/// the direction tuples in lexicographic order with Positive < Negative.
std::vector<ExpansionSignature> enumerate_signatures(std::size_t n);

/**
 * A one-sided formal Laurent series in a single variable, truncated after a
 * fixed number of coefficients. Coefficients are rational functions in the
 * other variables. coeffs[k] belongs to exponent anchor + k (Positive) or
 * anchor - k (Negative).
 */
class TruncatedDirectedSeries {
public:
    TruncatedDirectedSeries(std::size_t variable, Direction direction, int anchor,
                            std::vector<RationalFunction> coeffs);

    /// Series view of a nonzero polynomial, anchored at its extreme exponent
    /// in `variable`, zero-padded to `truncation_order` coefficients.
    static TruncatedDirectedSeries from_polynomial(const LaurentPolynomial& p, std::size_t variable,
                                                   Direction direction, std::size_t truncation_order);

    std::size_t variable() const noexcept { return variable_; }
    Direction direction() const noexcept { return direction_; }
    int anchor() const noexcept { return anchor_; }
    std::size_t truncation_order() const noexcept { return coeffs_.size(); }
    const std::vector<RationalFunction>& coeffs() const noexcept { return coeffs_; }

    int exponent_at(std::size_t k) const;
    /// Coefficient of z^e. Exponents on the far side of the anchor are 0;
    /// exponents beyond the truncation raise IndexOutOfRange.
    RationalFunction coefficient_at(int exponent) const;

    friend bool operator==(const TruncatedDirectedSeries&, const TruncatedDirectedSeries&) = default;

private:
    std::size_t variable_;
    Direction direction_;
    int anchor_;
    std::vector<RationalFunction> coeffs_;
};

/// Truncated Cauchy product. Raises DirectionMismatch when the directions
/// differ (the product of a positive and a negative series is undefined) and
/// ArityMismatch when the variables differ.
TruncatedDirectedSeries series_mul(const TruncatedDirectedSeries& s, const TruncatedDirectedSeries& t);

/**
 * Directed inverse of p viewed as a Laurent polynomial in z_variable with
 * coefficients in the remaining variables.
 *
 * Writing p = z^i * a_i * (1 + q0), the inverse is z^-i * a_i^-1 * sum_k (-q0)^k.
 * It is computed through the equivalent triangular recurrence on the
 * coefficients, which yields the same exact values. For Positive the anchor
 * is -low(p), for Negative -high(p). Raises ZeroPolynomial for p = 0.
 */
TruncatedDirectedSeries invert_directed(const LaurentPolynomial& p, std::size_t variable, Direction direction,
                                        std::size_t truncation_order);

/**
 * Coefficients of the directed inverse 1/Q selected by sig, restricted to box.
 * Points outside the series' support cone get exact zeros.
 */
GridFunction expand_nested(const LaurentPolynomial& q, const ExpansionSignature& sig, const Box& box);

} // namespace latgreen

#endif // LATGREEN_SERIES_HPP
