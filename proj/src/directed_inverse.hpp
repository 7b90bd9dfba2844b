#ifndef LATGREEN_SRC_DIRECTED_INVERSE_HPP
#define LATGREEN_SRC_DIRECTED_INVERSE_HPP

#include <cstddef>
#include <vector>

#include "latgreen/laurent_polynomial.hpp"
#include "latgreen/series.hpp"

namespace latgreen::detail {

// Directed inverse of p in z_v kept over a common denominator:
// the k-th coefficient is numerators[k] / lead^(k+1).
struct InverseNumerators {
    LaurentPolynomial lead;
    int anchor;
    std::vector<LaurentPolynomial> numerators;
};

InverseNumerators inverse_numerators(const LaurentPolynomial& p, std::size_t v, Direction direction,
                                     std::size_t count);

} // namespace latgreen::detail

#endif // LATGREEN_SRC_DIRECTED_INVERSE_HPP
