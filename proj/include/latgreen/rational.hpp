#ifndef LATGREEN_RATIONAL_HPP
#define LATGREEN_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace latgreen {

/**
 * Exact rational number backed by GMP.
 *
 * The value is always kept canonical: positive denominator, numerator and
 * denominator coprime, zero stored as 0/1. Structural equality is therefore
 * value equality.
 */
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) // NOLINT(google-explicit-constructor)
        : value_(static_cast<long>(value))
    {
    }

    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpz_class integer) : value_(std::move(integer)) {}
    explicit Rational(mpq_class value);

    /// Parses "p" or "p/q" (optional leading sign, q > 0 after sign handling).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    Rational abs() const;
    Rational inverse() const;
    double to_double() const { return value_.get_d(); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

enum class ArithKind { Add, Sub, Mul, Div };

/// Field operation dispatch; Div by zero raises DivisionByZero.
Rational rat_arith(const Rational& a, const Rational& b, ArithKind kind);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace latgreen

#endif // LATGREEN_RATIONAL_HPP
