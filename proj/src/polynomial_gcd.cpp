#include "latgreen/polynomial_gcd.hpp"

#include <algorithm>

#include "latgreen/error.hpp"

namespace latgreen {

namespace {

void require_ordinary(const LaurentPolynomial& p, const char* what)
{
    if (!p.is_ordinary())
        raise(ErrorKind::InvalidArgument, std::string(what) + " needs an ordinary polynomial, got "
                                              + p.str());
}

int degree_in(const LaurentPolynomial& p, std::size_t v)
{
    return degree_range(p, v).second;
}

bool divides_monomial(const ExponentVector& divisor, const ExponentVector& e)
{
    for (std::size_t i = 0; i < e.size(); ++i)
        if (divisor[i] > e[i])
            return false;
    return true;
}

LaurentPolynomial gcd_impl(const LaurentPolynomial& a, const LaurentPolynomial& b);

// gcd of all coefficients of p viewed as a polynomial in v.
LaurentPolynomial content_in(const LaurentPolynomial& p, std::size_t v)
{
    if (!p.involves(v))
        return p;
    const auto [lo, hi] = degree_range(p, v);
    LaurentPolynomial g(p.num_vars());
    for (int k = hi; k >= lo; --k) {
        LaurentPolynomial c = coefficient_of(p, v, k);
        if (c.is_zero())
            continue;
        g = g.is_zero() ? c : gcd_impl(g, c);
        if (g.is_constant())
            return LaurentPolynomial::constant(p.num_vars(), 1);
    }
    return g;
}

LaurentPolynomial primitive_part_in(const LaurentPolynomial& p, std::size_t v)
{
    LaurentPolynomial c = content_in(p, v);
    auto q = divide_exact(p, c);
    if (!q)
        raise(ErrorKind::InvalidArgument, "content does not divide polynomial");
    make_integer_primitive(*q);
    return *q;
}

LaurentPolynomial gcd_impl(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    const std::size_t n = a.num_vars();
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.is_constant() || b.is_constant())
        return LaurentPolynomial::constant(n, 1);

    std::size_t v = 0;
    while (v < n && !a.involves(v) && !b.involves(v))
        ++v;
    if (!a.involves(v))
        return gcd_impl(a, content_in(b, v));
    if (!b.involves(v))
        return gcd_impl(content_in(a, v), b);

    LaurentPolynomial content = gcd_impl(content_in(a, v), content_in(b, v));
    LaurentPolynomial pa = primitive_part_in(a, v);
    LaurentPolynomial pb = primitive_part_in(b, v);
    if (degree_in(pa, v) < degree_in(pb, v))
        std::swap(pa, pb);

    while (true) {
        LaurentPolynomial r = pseudo_remainder(pa, pb, v);
        if (r.is_zero())
            break;
        if (!r.involves(v)) {
            pb = LaurentPolynomial::constant(n, 1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_part_in(r, v);
    }
    LaurentPolynomial g = content * pb;
    make_integer_primitive(g);
    return g;
}

} // namespace

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    require_ordinary(a, "divide_exact");
    require_ordinary(b, "divide_exact");
    if (b.is_zero())
        raise(ErrorKind::DivisionByZero, "polynomial division by zero");

    const auto& [lead_exp, lead_coeff] = b.leading_term();
    LaurentPolynomial quotient(a.num_vars());
    LaurentPolynomial rest = a;
    while (!rest.is_zero()) {
        const auto& [e, c] = rest.leading_term();
        if (!divides_monomial(lead_exp, e))
            return std::nullopt;
        LaurentPolynomial t = LaurentPolynomial::monomial(e - lead_exp, c / lead_coeff);
        quotient += t;
        rest -= t * b;
    }
    return quotient;
}

LaurentPolynomial pseudo_remainder(const LaurentPolynomial& a, const LaurentPolynomial& b, std::size_t v)
{
    require_ordinary(a, "pseudo_remainder");
    require_ordinary(b, "pseudo_remainder");
    if (b.is_zero())
        raise(ErrorKind::DivisionByZero, "pseudo-remainder by zero");

    const int db = degree_in(b, v);
    const LaurentPolynomial lead_b = coefficient_of(b, v, db);
    LaurentPolynomial r = a;
    while (!r.is_zero()) {
        const int dr = degree_in(r, v);
        if (dr < db)
            break;
        const LaurentPolynomial lead_r = coefficient_of(r, v, dr);
        r = lead_b * r - lead_r * b.shifted(ExponentVector::unit(a.num_vars(), v, dr - db));
    }
    return r;
}

LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    require_ordinary(a, "polynomial_gcd");
    require_ordinary(b, "polynomial_gcd");
    if (a.num_vars() != b.num_vars())
        raise(ErrorKind::ArityMismatch, "gcd of polynomials with different variable counts");
    LaurentPolynomial g = gcd_impl(a, b);
    if (!g.is_zero())
        g *= g.leading_term().second.inverse();
    return g;
}

Rational make_integer_primitive(LaurentPolynomial& p)
{
    if (p.is_zero())
        return 1;
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        mpz_class nm = c.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nm.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    if (p.leading_term().second.sign() < 0)
        scale = -scale;
    p *= scale;
    return scale;
}

} // namespace latgreen
