#include "support.hpp"

#include <algorithm>

namespace latgreen::testkit {

Rational random_nonzero_rational(Rng& rng, int height)
{
    std::uniform_int_distribution<int> mag(1, height);
    std::uniform_int_distribution<int> coin(0, 1);
    const long p = mag(rng) * (coin(rng) ? 1 : -1);
    const long q = mag(rng);
    return Rational(p, q);
}

LaurentPolynomial random_polynomial(Rng& rng, std::size_t n, int lo, int hi, int height)
{
    LaurentPolynomial p(n);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> e(n, lo);
    while (true) {
        if (coin(rng))
            p.add_term(ExponentVector(e), random_nonzero_rational(rng, height));
        std::size_t i = 0;
        while (i < n && e[i] == hi) {
            e[i] = lo;
            ++i;
        }
        if (i == n)
            break;
        ++e[i];
    }
    return p;
}

LaurentPolynomial random_nonzero_polynomial(Rng& rng, std::size_t n, int lo, int hi, int height)
{
    while (true) {
        LaurentPolynomial p = random_polynomial(rng, n, lo, hi, height);
        if (!p.is_zero())
            return p;
    }
}

DifferenceOperator random_operator(Rng& rng, std::size_t n, int radius, int height)
{
    return DifferenceOperator::from_symbol(random_nonzero_polynomial(rng, n, -radius, radius, height));
}

std::map<std::vector<int>, mpq_class> oracle_apply(const DifferenceOperator& op, const GridFunction& f)
{
    std::map<std::vector<int>, mpq_class> values;
    for (std::size_t k = 0; k < f.box().size(); ++k) {
        const auto p = f.box().point_at(k);
        values[p.entries()] = f.values()[k].raw();
    }
    std::map<std::vector<int>, mpq_class> out;
    for (const auto& [m, unused] : values) {
        mpq_class sum = 0;
        bool inside = true;
        for (const auto& [alpha, c] : op.terms()) {
            std::vector<int> shifted = m;
            for (std::size_t i = 0; i < shifted.size(); ++i)
                shifted[i] += alpha[i];
            auto it = values.find(shifted);
            if (it == values.end()) {
                inside = false;
                break;
            }
            sum += c.raw() * it->second;
        }
        if (inside)
            out[m] = sum;
    }
    return out;
}

bool oracle_is_fundamental(const DifferenceOperator& op, const GridFunction& f)
{
    const auto image = oracle_apply(op, f);
    const std::vector<int> origin(f.num_vars(), 0);
    if (!image.count(origin))
        return false;
    for (const auto& [m, v] : image)
        if (v != (m == origin ? 1 : 0))
            return false;
    return true;
}

std::vector<mpq_class> oracle_geometric_inverse(const std::map<int, mpq_class>& p, Direction d, std::size_t count,
                                                int* anchor)
{
    // Work in w = z (Positive) or w = 1/z (Negative); then p = a w^i (1 + q0(w)).
    std::map<int, mpq_class> in_w;
    for (const auto& [e, c] : p)
        if (c != 0)
            in_w[d == Direction::Positive ? e : -e] = c;
    const int i = in_w.begin()->first;
    const mpq_class a = in_w.begin()->second;

    std::vector<mpq_class> q0(count, 0);
    for (const auto& [e, c] : in_w)
        if (e > i && static_cast<std::size_t>(e - i) < count)
            q0[static_cast<std::size_t>(e - i)] = c / a;

    // sum_{j < count} (-q0)^j, truncated to `count` coefficients.
    std::vector<mpq_class> total(count, 0);
    std::vector<mpq_class> power(count, 0);
    power[0] = 1;
    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t k = 0; k < count; ++k)
            total[k] += power[k];
        std::vector<mpq_class> next(count, 0);
        for (std::size_t x = 0; x < count; ++x)
            for (std::size_t y = 1; x + y < count; ++y)
                next[x + y] -= power[x] * q0[y];
        power = std::move(next);
    }
    for (auto& c : total)
        c /= a;
    // In w the series starts at w^-i; exponent in z is -i (Positive) or +i (Negative).
    *anchor = d == Direction::Positive ? -i : i;
    return total;
}

std::size_t oracle_rank(std::vector<std::vector<mpq_class>> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            const mpq_class f = rows[r][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t oracle_polynomial_kernel_dimension(const DifferenceOperator& op, unsigned max_degree)
{
    const std::size_t n = op.num_vars();
    std::vector<std::vector<int>> monomials;
    std::vector<int> e(n, 0);
    while (true) {
        int total = 0;
        for (int x : e)
            total += x;
        if (total <= static_cast<int>(max_degree))
            monomials.push_back(e);
        std::size_t i = 0;
        while (i < n && e[i] == static_cast<int>(max_degree)) {
            e[i] = 0;
            ++i;
        }
        if (i == n)
            break;
        ++e[i];
    }

    std::vector<std::vector<mpq_class>> rows;
    std::vector<int> x(n, 0);
    const int side = static_cast<int>(max_degree) + 2;
    while (true) {
        std::vector<mpq_class> row;
        for (const auto& mono : monomials) {
            mpq_class value = 0;
            for (const auto& [alpha, c] : op.terms()) {
                mpq_class term = c.raw();
                for (std::size_t i = 0; i < n; ++i) {
                    mpz_class base = x[i] + alpha[i];
                    mpz_class power;
                    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(mono[i]));
                    term *= power;
                }
                value += term;
            }
            row.push_back(value);
        }
        rows.push_back(std::move(row));
        std::size_t i = 0;
        while (i < n && x[i] == side - 1) {
            x[i] = 0;
            ++i;
        }
        if (i == n)
            break;
        ++x[i];
    }
    return monomials.size() - oracle_rank(std::move(rows));
}

} // namespace latgreen::testkit
