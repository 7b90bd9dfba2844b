#ifndef LATGREEN_LATTICE_HPP
#define LATGREEN_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "latgreen/grid.hpp"
#include "latgreen/laurent_polynomial.hpp"

namespace latgreen {

/**
 * Linear partial difference operator with constant coefficients,
 *
 *     (P f)(m) = sum_{alpha in A} c_alpha * f(m + alpha),
 *
 * stored as the finite map alpha -> c_alpha. At least one coefficient is
 * nonzero; constructing the zero operator raises ZeroOperator.
 */
class DifferenceOperator {
public:
    using Term = std::pair<ExponentVector, Rational>;

    DifferenceOperator(std::size_t num_vars, const std::vector<Term>& terms);
    /// Inverse of symbol(): every monomial z^alpha becomes the shift alpha.
    static DifferenceOperator from_symbol(const LaurentPolynomial& symbol);

    static DifferenceOperator identity(std::size_t num_vars);
    /// f(m + e_v) - f(m)
    static DifferenceOperator forward_difference(std::size_t num_vars, std::size_t v = 0);
    /// f(m) - (1/(2n)) * sum over the 2n nearest neighbours.
    static DifferenceOperator laplacian(std::size_t num_vars);

    std::size_t num_vars() const noexcept { return coefficients_.num_vars(); }
    /// Shift -> coefficient, graded-lex ordered.
    const LaurentPolynomial::TermMap& terms() const noexcept { return coefficients_.terms(); }

    friend bool operator==(const DifferenceOperator&, const DifferenceOperator&) = default;

private:
    explicit DifferenceOperator(LaurentPolynomial coefficients);

    // Shares the sparse canonical map of LaurentPolynomial; exponent = shift.
    LaurentPolynomial coefficients_;
};

/// Term-for-term transcription alpha -> z^alpha.
LaurentPolynomial symbol(const DifferenceOperator& op);

/// 1 at the origin (when inside the box), 0 elsewhere.
GridFunction delta(const Box& box);

/// Largest sub-box I with m + alpha in box for all m in I and every shift alpha;
/// nullopt when no such point exists.
std::optional<Box> interior(const Box& box, const DifferenceOperator& op);

/// Pointwise evaluation of (P f)(m) on interior(f.box(), op).
GridFunction apply(const DifferenceOperator& op, const GridFunction& f);

struct Violation {
    LatticePoint point;
    Rational actual;
    Rational expected;
};

struct VerificationReport {
    bool passed = false;
    Box interior;
    /// Every interior point where the check fails, lexicographic order.
    std::vector<Violation> violations;
};

/// Checks P f = delta exactly on the interior.
/// Raises EmptyInterior, or OriginNotCovered when the interior misses 0.
VerificationReport verify_fundamental(const DifferenceOperator& op, const GridFunction& f);

} // namespace latgreen

#endif // LATGREEN_LATTICE_HPP
