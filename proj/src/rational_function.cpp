#include "latgreen/rational_function.hpp"

#include "latgreen/error.hpp"
#include "latgreen/polynomial_gcd.hpp"

namespace latgreen {

RationalFunction rf_normalize(const LaurentPolynomial& num, const LaurentPolynomial& den)
{
    if (num.num_vars() != den.num_vars())
        raise(ErrorKind::ArityMismatch, "numerator and denominator variable counts differ");
    if (den.is_zero())
        raise(ErrorKind::DivisionByZero, "rational function with zero denominator");
    const std::size_t n = num.num_vars();
    if (num.is_zero())
        return RationalFunction(RationalFunction::Canonical{}, LaurentPolynomial(n),
                                LaurentPolynomial::constant(n, 1));

    // Clear monomial content on both sides and remember the net monomial.
    const ExponentVector num_min = num.min_exponents();
    const ExponentVector den_min = den.min_exponents();
    LaurentPolynomial a = num.shifted(-num_min);
    LaurentPolynomial b = den.shifted(-den_min);

    const LaurentPolynomial g = polynomial_gcd(a, b);
    if (!g.is_constant()) {
        a = *divide_exact(a, g);
        b = *divide_exact(b, g);
    }
    a = a.shifted(num_min - den_min);

    // Joint integer scaling: clear all denominators, divide out the joint
    // content, make the denominator's leading coefficient positive.
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto* p : {&a, &b}) {
        for (const auto& [e, c] : p->terms()) {
            mpz_class d = c.denominator();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
            mpz_class m = c.numerator();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), m.get_mpz_t());
        }
    }
    Rational scale(den_lcm, num_gcd);
    if (b.leading_term().second.sign() < 0)
        scale = -scale;
    a *= scale;
    b *= scale;
    return RationalFunction(RationalFunction::Canonical{}, std::move(a), std::move(b));
}

RationalFunction::RationalFunction(std::size_t num_vars)
    : numerator_(num_vars), denominator_(LaurentPolynomial::constant(num_vars, 1))
{
}

RationalFunction::RationalFunction(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : RationalFunction(rf_normalize(numerator, denominator))
{
}

RationalFunction::RationalFunction(const LaurentPolynomial& polynomial)
    : RationalFunction(rf_normalize(polynomial, LaurentPolynomial::constant(polynomial.num_vars(), 1)))
{
}

Rational RationalFunction::constant_value() const
{
    if (!is_constant())
        raise(ErrorKind::InvalidArgument, "rational function " + str() + " is not constant");
    return numerator_.constant_term() / denominator_.constant_term();
}

RationalFunction RationalFunction::operator-() const
{
    return RationalFunction(Canonical{}, -numerator_, denominator_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.denominator_ == b.denominator_)
        return rf_normalize(a.numerator_ + b.numerator_, a.denominator_);
    return rf_normalize(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                        a.denominator_ * b.denominator_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return rf_normalize(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero())
        raise(ErrorKind::DivisionByZero, "division by the zero rational function");
    return rf_normalize(a.numerator_ * b.denominator_, a.denominator_ * b.numerator_);
}

std::string RationalFunction::str(const std::string& var_prefix) const
{
    if (denominator_.is_constant() && denominator_.constant_term().is_one())
        return numerator_.str(var_prefix);
    return "(" + numerator_.str(var_prefix) + ")/(" + denominator_.str(var_prefix) + ")";
}

} // namespace latgreen
