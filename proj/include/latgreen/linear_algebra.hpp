#ifndef LATGREEN_LINEAR_ALGEBRA_HPP
#define LATGREEN_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "latgreen/rational.hpp"

namespace latgreen {

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/**
 * Row echelon form computed by fraction-free (Bareiss) elimination.
 *
 * Each input row is first scaled to integers. Pivots are searched column by
 * column among the first `pivot_columns` columns, taking the first nonzero
 * entry at or below the current row; the remaining columns (an augmented
 * right-hand side, say) are carried along but never pivoted on. Every entry
 * stays an integer: each step divides exactly by the previous pivot.
 */
struct EchelonForm {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpz_class> entries;
    std::vector<std::size_t> pivots; ///< pivot column of row r, for r < rank

    std::size_t rank() const noexcept { return pivots.size(); }
    const mpz_class& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

EchelonForm fraction_free_echelon(const RationalMatrix& m, std::size_t pivot_columns);
inline EchelonForm fraction_free_echelon(const RationalMatrix& m)
{
    return fraction_free_echelon(m, m.cols());
}

/// Reduced row echelon form (pivots 1, zero above and below); zero rows dropped.
RationalMatrix reduced_row_echelon(const RationalMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {x : m x = 0}, one vector per non-pivot column, that column set to 1.
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m);

/**
 * Solves a x = b. Non-pivot unknowns take the value free_value(column)
 * (called in increasing column order); pivot unknowns follow by back
 * substitution. Returns nullopt when the system is inconsistent.
 */
std::optional<std::vector<Rational>> solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b,
                                                         const std::function<Rational(std::size_t)>& free_value);

} // namespace latgreen

#endif // LATGREEN_LINEAR_ALGEBRA_HPP
