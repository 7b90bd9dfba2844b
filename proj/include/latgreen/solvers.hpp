#ifndef LATGREEN_SOLVERS_HPP
#define LATGREEN_SOLVERS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latgreen/lattice.hpp"
#include "latgreen/series.hpp"

namespace latgreen {

// ---------------------------------------------------------------------------
// Fundamental solutions

/// Coefficients of the directed inverse of P(1/z) selected by sig, on box.
GridFunction fs_series(const DifferenceOperator& op, const ExpansionSignature& sig, const Box& box);

struct SignedSolution {
    ExpansionSignature signature;
    GridFunction grid;
};

/// fs_series for every signature, in enumerate_signatures order. Branches
/// run concurrently when `parallel` is set; the result order is unaffected.
std::vector<SignedSolution> fs_series_all(const DifferenceOperator& op, const Box& box, bool parallel = true);

/// Chooses the unknowns left free by the finite-window linear system.
class ExtensionPolicy {
public:
    enum class Rule { FreeVarsZero, FreeVarsSeeded };

    static ExtensionPolicy zero() { return ExtensionPolicy(Rule::FreeVarsZero, 0); }
    static ExtensionPolicy seeded(std::uint64_t seed) { return ExtensionPolicy(Rule::FreeVarsSeeded, seed); }
    /// "zero" or "seed:<int>"
    static ExtensionPolicy parse(std::string_view text);

    Rule rule() const noexcept { return rule_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::string str() const;

    /// Fresh source of values for free unknowns, queried in increasing
    /// column order. Seeded values are p/q with |p| <= 9, 1 <= q <= 9 drawn
    /// from a mt19937_64 stream, so they are reproducible across platforms.
    std::function<Rational(std::size_t)> free_value_source() const;

private:
    ExtensionPolicy(Rule rule, std::uint64_t seed) : rule_(rule), seed_(seed) {}

    Rule rule_;
    std::uint64_t seed_;
};

/**
 * A solution of P f = delta on the interior of box, found as an exact
 * solution of the underdetermined system "(P f)(m) = delta(m) for every
 * interior m" with one unknown per box point (lexicographic columns).
 * This is only a finite-window solution; different policies give different
 * solutions. A box at least the operator's support span wider than the
 * wanted interior in each coordinate is recommended.
 *
 * Raises EmptyInterior, OriginNotCovered, or BoxTooSmall if elimination
 * finds the system inconsistent.
 */
GridFunction fs_linear(const DifferenceOperator& op, const Box& box, const ExtensionPolicy& policy);

/// Passes iff P(f - g) vanishes on the interior. Raises BoxMismatch, EmptyInterior.
VerificationReport homogeneous_difference(const DifferenceOperator& op, const GridFunction& f, const GridFunction& g);

// ---------------------------------------------------------------------------
// Polynomial solutions of P p = 0

/// Ordinary polynomial in the lattice coordinates m1..mn.
class MultiPolynomial {
public:
    explicit MultiPolynomial(std::size_t num_vars) : poly_(num_vars) {}
    /// Raises InvalidArgument if p has a negative exponent.
    explicit MultiPolynomial(LaurentPolynomial p);

    std::size_t num_vars() const noexcept { return poly_.num_vars(); }
    const LaurentPolynomial& polynomial() const noexcept { return poly_; }
    const LaurentPolynomial::TermMap& terms() const noexcept { return poly_.terms(); }
    bool is_zero() const noexcept { return poly_.is_zero(); }
    long total_degree() const;

    Rational evaluate(const LatticePoint& m) const;

    friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

    /// e.g. "m1^2 - m2^2"
    std::string str() const { return poly_.str("m"); }

private:
    LaurentPolynomial poly_;
};

/// sum_alpha c_alpha * p(m + alpha), expanded exactly.
MultiPolynomial apply_to_polynomial(const DifferenceOperator& op, const MultiPolynomial& p);

/// Monomials of total degree <= max_degree in graded-lex order.
std::vector<ExponentVector> monomials_up_to(std::size_t num_vars, unsigned max_degree);

/**
 * Basis of { p : deg p <= max_degree, P p = 0 }, from an exact nullspace.
 * The basis is the reduced row echelon form with monomials ordered from the
 * graded-lex largest down, so every element has leading coefficient 1 and a
 * distinct leading monomial. Elements are listed by increasing leading
 * monomial.
 */
std::vector<MultiPolynomial> polynomial_solution_basis(const DifferenceOperator& op, unsigned max_degree);

} // namespace latgreen

#endif // LATGREEN_SOLVERS_HPP
