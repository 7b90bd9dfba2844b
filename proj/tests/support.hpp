#ifndef LATGREEN_TESTS_SUPPORT_HPP
#define LATGREEN_TESTS_SUPPORT_HPP

// Test-only generators and oracles. The oracles deliberately avoid the
// library's algorithms: they work on plain GMP values and std::map.

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "latgreen/lattice.hpp"
#include "latgreen/laurent_polynomial.hpp"
#include "latgreen/series.hpp"

namespace latgreen::testkit {

using Rng = std::mt19937_64;

/// p/q with 1 <= |p| <= height, 1 <= q <= height.
Rational random_nonzero_rational(Rng& rng, int height = 9);

/// Random polynomial with exponents in [lo, hi]^n, each slot kept with probability 1/2.
LaurentPolynomial random_polynomial(Rng& rng, std::size_t n, int lo, int hi, int height = 9);
LaurentPolynomial random_nonzero_polynomial(Rng& rng, std::size_t n, int lo, int hi, int height = 9);

/// Random nonzero operator with support in [-radius, radius]^n.
DifferenceOperator random_operator(Rng& rng, std::size_t n, int radius = 1, int height = 9);

/// Brute force (P f)(m) on every m whose shifts stay in the box, keyed by point.
std::map<std::vector<int>, mpq_class> oracle_apply(const DifferenceOperator& op, const GridFunction& f);

/// True iff oracle_apply(op, f) equals delta on its whole domain and the domain holds the origin.
bool oracle_is_fundamental(const DifferenceOperator& op, const GridFunction& f);

/**
 * Directed inverse of a univariate Laurent polynomial over Q computed by the
 * literal geometric sum: p = a z^i (1 + q0), 1/p = z^-i / a * sum_j (-q0)^j,
 * truncated after `count` coefficients. Returns coefficients from the anchor
 * inward.
 */
std::vector<mpq_class> oracle_geometric_inverse(const std::map<int, mpq_class>& p, Direction d, std::size_t count,
                                                int* anchor);

/// Rank over Q by plain Gauss-Jordan on mpq_class.
std::size_t oracle_rank(std::vector<std::vector<mpq_class>> rows);

/// Dimension of { p : total degree <= d, P p vanishes on the (d+2)^n grid [0, d+1]^n },
/// found by evaluating P on each monomial at the grid points.
std::size_t oracle_polynomial_kernel_dimension(const DifferenceOperator& op, unsigned max_degree);

} // namespace latgreen::testkit

#endif // LATGREEN_TESTS_SUPPORT_HPP
