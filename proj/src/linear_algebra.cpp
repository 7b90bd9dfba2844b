#include "latgreen/linear_algebra.hpp"

#include <algorithm>

#include "latgreen/error.hpp"

namespace latgreen {

EchelonForm fraction_free_echelon(const RationalMatrix& m, std::size_t pivot_columns)
{
    EchelonForm e;
    e.rows = m.rows();
    e.cols = m.cols();
    e.entries.resize(e.rows * e.cols);
    pivot_columns = std::min(pivot_columns, e.cols);

    // Scale each row by the lcm of its denominators.
    for (std::size_t r = 0; r < e.rows; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < e.cols; ++c) {
            const mpz_class d = m(r, c).denominator();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t c = 0; c < e.cols; ++c) {
            const mpq_class& q = m(r, c).raw();
            e.entries[r * e.cols + c] = q.get_num() * (lcm / q.get_den());
        }
    }

    auto at = [&e](std::size_t r, std::size_t c) -> mpz_class& { return e.entries[r * e.cols + c]; };

    mpz_class previous = 1;
    mpz_class t;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_columns && row < e.rows; ++col) {
        std::size_t p = row;
        while (p < e.rows && at(p, col) == 0)
            ++p;
        if (p == e.rows)
            continue;
        if (p != row)
            for (std::size_t c = 0; c < e.cols; ++c)
                std::swap(at(p, c), at(row, c));

        const mpz_class pivot = at(row, col);
        for (std::size_t i = row + 1; i < e.rows; ++i) {
            const mpz_class factor = at(i, col);
            for (std::size_t j = col + 1; j < e.cols; ++j) {
                // (pivot * a_ij - a_i,col * a_row,j) / previous, exact.
                mpz_mul(t.get_mpz_t(), pivot.get_mpz_t(), at(i, j).get_mpz_t());
                mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), at(row, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            at(i, col) = 0;
        }
        previous = pivot;
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

RationalMatrix reduced_row_echelon(const RationalMatrix& m, std::vector<std::size_t>* pivots)
{
    const EchelonForm e = fraction_free_echelon(m);
    const std::size_t rank = e.rank();
    RationalMatrix r(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            r(i, c) = Rational(e.at(i, c));

    for (std::size_t i = rank; i-- > 0;) {
        const std::size_t pc = e.pivots[i];
        const Rational inv = r(i, pc).inverse();
        for (std::size_t c = pc; c < m.cols(); ++c)
            r(i, c) *= inv;
        for (std::size_t above = 0; above < i; ++above) {
            const Rational factor = r(above, pc);
            if (factor.is_zero())
                continue;
            for (std::size_t c = pc; c < m.cols(); ++c)
                r(above, c) -= factor * r(i, c);
        }
    }
    if (pivots)
        *pivots = e.pivots;
    return r;
}

std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    const RationalMatrix r = reduced_row_echelon(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t pc : pivots)
        is_pivot[pc] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> x(m.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -r(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b,
                                                         const std::function<Rational(std::size_t)>& free_value)
{
    if (b.size() != a.rows())
        raise(ErrorKind::ArityMismatch, "right-hand side length differs from the row count");
    const std::size_t n = a.cols();
    RationalMatrix augmented(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c)
            augmented(r, c) = a(r, c);
        augmented(r, n) = b[r];
    }

    const EchelonForm e = fraction_free_echelon(augmented, n);
    for (std::size_t r = e.rank(); r < e.rows; ++r)
        if (e.at(r, n) != 0)
            return std::nullopt;

    std::vector<bool> is_pivot(n, false);
    for (std::size_t pc : e.pivots)
        is_pivot[pc] = true;
    std::vector<Rational> x(n);
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            x[c] = free_value(c);

    for (std::size_t r = e.rank(); r-- > 0;) {
        const std::size_t pc = e.pivots[r];
        mpq_class sum(e.at(r, n));
        for (std::size_t j = pc + 1; j < n; ++j)
            if (e.at(r, j) != 0 && !x[j].is_zero())
                sum -= e.at(r, j) * x[j].raw();
        x[pc] = Rational(mpq_class(sum / e.at(r, pc)));
    }
    return x;
}

} // namespace latgreen
